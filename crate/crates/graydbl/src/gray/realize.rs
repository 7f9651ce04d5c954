//! Bounded realization of the tensor product of two double categories.
//!
//! The tensor `A ⊗ B` is presented by generators and relations read off the
//! cone conditions: its objects are pairs, its 1-cells are alternating paths
//! of "whiskered" 1-cells of `A` and `B` (fused through the composition tables
//! whenever two consecutive generators come from the same side), and its
//! squares are pasting words in the generating squares — whiskered squares of
//! either side, mixed squares of a 1-cell with a transversal 1-cell, and the
//! invertible interchangers — modulo the congruence generated by the cone
//! laws and the middle-four interchange.
//!
//! The tensor of finite double categories need not be finite, so everything
//! here is bounded: 1-cell paths longer than `max_depth` and pasting words
//! with more than `max_depth` generating squares abort the construction with
//! [`Realization::Unbounded`] and a reason. When the word problem does close
//! within the bound, the resulting double category is validated, the
//! tautological cone over it is validated, and [`certify_realization`] can
//! check the universal property against a chosen codomain by comparing the
//! functors out of the realization with the independently enumerated cones.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::budget::Budget;
use crate::dbl::{FiniteDoubleCategory, HCell, HId, ObjId, SqId, Square, VCell, VId};
use crate::error::{Error, Result};
use crate::functor::{enumerate_functors, DoubleFunctor};

use super::{cone_postcompose, enumerate_cones, validate_cone, TensorCone};

/// Outcome of [`realize_tensor`].
#[derive(Debug)]
pub enum Realization {
    Realized(Box<RealizedTensor>),
    /// The word problem did not close within the depth bound; the string
    /// explains which resource overflowed.
    Unbounded(String),
}

/// A finite double category together with the tautological cone exhibiting it
/// as the tensor of the cone's two domains.
///
/// `hcell_words`, `vcell_words` and `square_words` record how every cell of
/// the realization decomposes into generating cells; evaluating those words
/// in any other cone over the same domains yields the unique comparison
/// functor out of the realization ([`functor_from_cone`]).
#[derive(Debug, Clone, serde::Serialize)]
pub struct RealizedTensor {
    pub category: FiniteDoubleCategory,
    pub cone: TensorCone,
    pub max_depth: usize,
    pub hcell_words: Vec<((ObjId, ObjId), Vec<HStep>)>,
    pub vcell_words: Vec<((ObjId, ObjId), Vec<VStep>)>,
    pub square_words: Vec<CellWord>,
}

/// One generator in a horizontal 1-cell of a realized tensor: a cell of one
/// side whiskered by an object of the other.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub enum HStep {
    A(HId, ObjId),
    B(ObjId, HId),
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub enum VStep {
    A(VId, ObjId),
    B(ObjId, VId),
}

/// A pasting word describing a square of a realized tensor in terms of
/// generating squares; evaluable in any cone over the same domains.
#[derive(Debug, Clone, serde::Serialize)]
pub enum CellWord {
    IdV {
        src: (ObjId, ObjId),
        steps: Vec<HStep>,
    },
    IdH {
        src: (ObjId, ObjId),
        steps: Vec<VStep>,
    },
    SqA(SqId, ObjId),
    SqB(ObjId, SqId),
    HV(HId, VId),
    VH(VId, HId),
    HH(HId, HId, bool),
    VV(VId, VId, bool),
    /// Horizontal pasting, left to right.
    Row(Vec<CellWord>),
    /// Vertical pasting, top to bottom.
    Col(Vec<CellWord>),
}

fn eval_obj(cone: &TensorCone, x: ObjId, y: ObjId) -> ObjId {
    cone.obj_obj[x.0][y.0]
}

fn eval_hsteps(cone: &TensorCone, src: (ObjId, ObjId), steps: &[HStep]) -> HId {
    let d = &cone.c;
    let mut cur = d.h_id(eval_obj(cone, src.0, src.1));
    for s in steps {
        let next = match *s {
            HStep::A(h, y) => cone.h_obj[h.0][y.0],
            HStep::B(x, p) => cone.obj_h[x.0][p.0],
        };
        cur = d.comp_h(cur, next);
    }
    cur
}

fn eval_vsteps(cone: &TensorCone, src: (ObjId, ObjId), steps: &[VStep]) -> VId {
    let d = &cone.c;
    let mut cur = d.v_id(eval_obj(cone, src.0, src.1));
    for s in steps {
        let next = match *s {
            VStep::A(v, y) => cone.v_obj[v.0][y.0],
            VStep::B(x, q) => cone.obj_v[x.0][q.0],
        };
        cur = d.comp_v(cur, next);
    }
    cur
}

fn eval_word(cone: &TensorCone, w: &CellWord) -> SqId {
    let d = &cone.c;
    match w {
        CellWord::IdV { src, steps } => d.sq_v_id(eval_hsteps(cone, *src, steps)),
        CellWord::IdH { src, steps } => d.sq_h_id(eval_vsteps(cone, *src, steps)),
        CellWord::SqA(s, y) => cone.sq_obj[s.0][y.0],
        CellWord::SqB(x, s) => cone.obj_sq[x.0][s.0],
        CellWord::HV(h, q) => cone.h_v[h.0][q.0],
        CellWord::VH(v, p) => cone.v_h[v.0][p.0],
        CellWord::HH(h, p, inv) => {
            if *inv {
                cone.h_h_inv[h.0][p.0]
            } else {
                cone.h_h[h.0][p.0]
            }
        }
        CellWord::VV(v, q, inv) => {
            if *inv {
                cone.v_v_inv[v.0][q.0]
            } else {
                cone.v_v[v.0][q.0]
            }
        }
        CellWord::Row(items) => {
            let mut it = items.iter().map(|i| eval_word(cone, i));
            let first = it.next().expect("nonempty pasting row");
            it.fold(first, |acc, s| d.paste_h(acc, s))
        }
        CellWord::Col(items) => {
            let mut it = items.iter().map(|i| eval_word(cone, i));
            let first = it.next().expect("nonempty pasting column");
            it.fold(first, |acc, s| d.paste_v(acc, s))
        }
    }
}

// Evaluation words for every cell of the realization.
fn hgen_step(g: HGen) -> HStep {
    match g {
        HGen::A(h, y) => HStep::A(h, y),
        HGen::B(x, p) => HStep::B(x, p),
    }
}
fn vgen_step(g: VGen) -> VStep {
    match g {
        VGen::A(v, y) => VStep::A(v, y),
        VGen::B(x, q) => VStep::B(x, q),
    }
}
fn word_to_cell(w: &SqWord) -> CellWord {
    match w {
        SqWord::IdV(p) => CellWord::IdV {
            src: p.src,
            steps: p.gens.iter().map(|&g| hgen_step(g)).collect(),
        },
        SqWord::IdH(q) => CellWord::IdH {
            src: q.src,
            steps: q.gens.iter().map(|&g| vgen_step(g)).collect(),
        },
        SqWord::Gen(SqGen::SqA(s, y)) => CellWord::SqA(*s, *y),
        SqWord::Gen(SqGen::SqB(x, s)) => CellWord::SqB(*x, *s),
        SqWord::Gen(SqGen::HV(h, q)) => CellWord::HV(*h, *q),
        SqWord::Gen(SqGen::VH(v, p)) => CellWord::VH(*v, *p),
        SqWord::Gen(SqGen::HH(h, p, inv)) => CellWord::HH(*h, *p, *inv),
        SqWord::Gen(SqGen::VV(v, q, inv)) => CellWord::VV(*v, *q, *inv),
        SqWord::H(items) => CellWord::Row(items.iter().map(word_to_cell).collect()),
        SqWord::V(items) => CellWord::Col(items.iter().map(word_to_cell).collect()),
    }
}

/// A generators-and-relations presentation of `A ⊗ B`: the pair cells that
/// generate it and the relation families between formal pasting words.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TensorPresentation {
    pub objects: Vec<String>,
    pub h_generators: Vec<String>,
    pub v_generators: Vec<String>,
    pub square_generators: Vec<String>,
    pub relations: Vec<PresentedRelation>,
}

/// One defining relation: two pasting words with the same frame, tagged
/// with the family they instantiate.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PresentedRelation {
    pub family: String,
    pub lhs_label: String,
    pub rhs_label: String,
    pub lhs: CellWord,
    pub rhs: CellWord,
}

/// The presentation of `A ⊗ B` by generating pair cells and relations.
///
/// Generators are the non-identity cells of either factor whiskered by the
/// cells of the other, plus the invertible interchangers of two non-identity
/// 1-cells (with their formal inverses). Pairs involving an identity do not
/// generate: they collapse to identities or to the other factor's cells.
pub fn build_presentation(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<TensorPresentation> {
    let p = Pres { a, b };
    let mut objects = Vec::new();
    for x in a.obj_ids() {
        for y in b.obj_ids() {
            objects.push(format!("{}⊛{}", a.objects[x.0], b.objects[y.0]));
        }
    }

    let mut h_generators = Vec::new();
    for h in a.h_ids().filter(|&h| !is_h_id(a, h)) {
        for y in b.obj_ids() {
            h_generators.push(HGen::A(h, y).label(a, b));
        }
    }
    for x in a.obj_ids() {
        for pc in b.h_ids().filter(|&pc| !is_h_id(b, pc)) {
            h_generators.push(HGen::B(x, pc).label(a, b));
        }
    }
    let mut v_generators = Vec::new();
    for v in a.v_ids().filter(|&v| !is_v_id(a, v)) {
        for y in b.obj_ids() {
            v_generators.push(VGen::A(v, y).label(a, b));
        }
    }
    for x in a.obj_ids() {
        for q in b.v_ids().filter(|&q| !is_v_id(b, q)) {
            v_generators.push(VGen::B(x, q).label(a, b));
        }
    }

    let degenerate =
        |cat: &FiniteDoubleCategory, s: SqId| -> bool {
            cat.h_ids().any(|h| cat.sq_v_id(h) == s) || cat.v_ids().any(|v| cat.sq_h_id(v) == s)
        };
    let mut square_generators = Vec::new();
    for s in a.sq_ids().filter(|&s| !degenerate(a, s)) {
        for y in b.obj_ids() {
            square_generators.push(p.word_label(&p.w_sq_a(s, y)));
        }
    }
    for x in a.obj_ids() {
        for s in b.sq_ids().filter(|&s| !degenerate(b, s)) {
            square_generators.push(p.word_label(&p.w_sq_b(x, s)));
        }
    }
    for h in a.h_ids().filter(|&h| !is_h_id(a, h)) {
        for q in b.v_ids().filter(|&q| !is_v_id(b, q)) {
            square_generators.push(p.word_label(&p.w_hv(h, q)));
        }
    }
    for v in a.v_ids().filter(|&v| !is_v_id(a, v)) {
        for pc in b.h_ids().filter(|&pc| !is_h_id(b, pc)) {
            square_generators.push(p.word_label(&p.w_vh(v, pc)));
        }
    }
    for h in a.h_ids().filter(|&h| !is_h_id(a, h)) {
        for pc in b.h_ids().filter(|&pc| !is_h_id(b, pc)) {
            square_generators.push(p.word_label(&p.w_hh(h, pc, false)));
            square_generators.push(p.word_label(&p.w_hh(h, pc, true)));
        }
    }
    for v in a.v_ids().filter(|&v| !is_v_id(a, v)) {
        for q in b.v_ids().filter(|&q| !is_v_id(b, q)) {
            square_generators.push(p.word_label(&p.w_vv(v, q, false)));
            square_generators.push(p.word_label(&p.w_vv(v, q, true)));
        }
    }

    let relations = presentation_relations(a, b, budget)?
        .into_iter()
        .map(|(family, lhs, rhs)| {
            let lhs = p.normalize(lhs);
            let rhs = p.normalize(rhs);
            PresentedRelation {
                family: family.to_string(),
                lhs_label: p.word_label(&lhs),
                rhs_label: p.word_label(&rhs),
                lhs: word_to_cell(&lhs),
                rhs: word_to_cell(&rhs),
            }
        })
        .collect();

    Ok(TensorPresentation {
        objects,
        h_generators,
        v_generators,
        square_generators,
        relations,
    })
}

/// The unique functor out of a realization that carries its tautological
/// cone to the given cone (over the same pair of domains).
pub fn functor_from_cone(rt: &RealizedTensor, cone: &TensorCone) -> Result<DoubleFunctor> {
    if cone.a != rt.cone.a || cone.b != rt.cone.b {
        return Err(Error::structure(
            "cone is not over the domains of this realization",
        ));
    }
    let nb = rt.cone.b.objects.len();
    let obj: Vec<ObjId> = rt
        .category
        .objects
        .iter()
        .enumerate()
        .map(|(o, _)| eval_obj(cone, ObjId(o / nb), ObjId(o % nb)))
        .collect();
    let h = rt
        .hcell_words
        .iter()
        .map(|(src, steps)| eval_hsteps(cone, *src, steps))
        .collect();
    let v = rt
        .vcell_words
        .iter()
        .map(|(src, steps)| eval_vsteps(cone, *src, steps))
        .collect();
    let sq = rt
        .square_words
        .iter()
        .map(|w| eval_word(cone, w))
        .collect();
    DoubleFunctor { obj, h, v, sq }.validated(&rt.category, &cone.c)
}

/// The functor `u ⊗ w` between two realized tensors.
pub fn tensor_functor(
    rt_dom: &RealizedTensor,
    rt_cod: &RealizedTensor,
    u: &DoubleFunctor,
    w: &DoubleFunctor,
) -> Result<DoubleFunctor> {
    let cone = super::cone_precompose(&rt_cod.cone, u, &rt_dom.cone.a, w, &rt_dom.cone.b);
    functor_from_cone(rt_dom, &cone)
}

// ---------------------------------------------------------------------------
// 1-cell paths
// ---------------------------------------------------------------------------

/// A generating horizontal 1-cell: a 1-cell of one side whiskered by an
/// object of the other. Only nonidentity 1-cells appear as generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum HGen {
    A(HId, ObjId),
    B(ObjId, HId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum VGen {
    A(VId, ObjId),
    B(ObjId, VId),
}

trait PathGen: Copy + Ord + std::fmt::Debug {
    fn src(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId);
    fn tgt(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId);
    /// Compose two same-side generators through the underlying table.
    /// `None`: different sides (not fusable). `Some(None)`: fused to an
    /// identity. `Some(Some(g))`: fused to the generator `g`.
    fn fuse(
        self,
        other: Self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Option<Option<Self>>;
    fn label(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> String;
}

fn is_h_id(cat: &FiniteDoubleCategory, h: HId) -> bool {
    cat.h_id(cat.hcell(h).src) == h
}

fn is_v_id(cat: &FiniteDoubleCategory, v: VId) -> bool {
    cat.v_id(cat.vcell(v).src) == v
}

impl PathGen for HGen {
    fn src(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId) {
        match self {
            HGen::A(h, y) => (a.hcell(h).src, y),
            HGen::B(x, p) => (x, b.hcell(p).src),
        }
    }
    fn tgt(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId) {
        match self {
            HGen::A(h, y) => (a.hcell(h).tgt, y),
            HGen::B(x, p) => (x, b.hcell(p).tgt),
        }
    }
    fn fuse(
        self,
        other: Self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Option<Option<Self>> {
        match (self, other) {
            (HGen::A(h, y), HGen::A(h2, _)) => {
                let c = a.comp_h(h, h2);
                Some((!is_h_id(a, c)).then_some(HGen::A(c, y)))
            }
            (HGen::B(x, p), HGen::B(_, p2)) => {
                let c = b.comp_h(p, p2);
                Some((!is_h_id(b, c)).then_some(HGen::B(x, c)))
            }
            _ => None,
        }
    }
    fn label(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> String {
        match self {
            HGen::A(h, y) => format!("{}⊛{}", a.hcell(h).name, b.objects[y.0]),
            HGen::B(x, p) => format!("{}⊛{}", a.objects[x.0], b.hcell(p).name),
        }
    }
}

impl PathGen for VGen {
    fn src(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId) {
        match self {
            VGen::A(v, y) => (a.vcell(v).src, y),
            VGen::B(x, q) => (x, b.vcell(q).src),
        }
    }
    fn tgt(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId) {
        match self {
            VGen::A(v, y) => (a.vcell(v).tgt, y),
            VGen::B(x, q) => (x, b.vcell(q).tgt),
        }
    }
    fn fuse(
        self,
        other: Self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Option<Option<Self>> {
        match (self, other) {
            (VGen::A(v, y), VGen::A(v2, _)) => {
                let c = a.comp_v(v, v2);
                Some((!is_v_id(a, c)).then_some(VGen::A(c, y)))
            }
            (VGen::B(x, q), VGen::B(_, q2)) => {
                let c = b.comp_v(q, q2);
                Some((!is_v_id(b, c)).then_some(VGen::B(x, c)))
            }
            _ => None,
        }
    }
    fn label(self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> String {
        match self {
            VGen::A(v, y) => format!("{}⊛{}", a.vcell(v).name, b.objects[y.0]),
            VGen::B(x, q) => format!("{}⊛{}", a.objects[x.0], b.vcell(q).name),
        }
    }
}

/// A normal-form path of generators: consecutive generators always come from
/// different sides (same-side neighbours are fused eagerly).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Path<G> {
    src: (ObjId, ObjId),
    gens: Vec<G>,
}

type HPath = Path<HGen>;
type VPath = Path<VGen>;

impl<G: PathGen> Path<G> {
    fn empty(o: (ObjId, ObjId)) -> Self {
        Path { src: o, gens: vec![] }
    }

    fn single(g: G, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> Self {
        Path { src: g.src(a, b), gens: vec![g] }
    }

    fn tgt(&self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> (ObjId, ObjId) {
        self.gens.last().map(|g| g.tgt(a, b)).unwrap_or(self.src)
    }

    fn push(&mut self, g: G, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) {
        debug_assert_eq!(self.tgt(a, b), g.src(a, b));
        if let Some(&last) = self.gens.last() {
            if let Some(fused) = last.fuse(g, a, b) {
                self.gens.pop();
                if let Some(f) = fused {
                    self.gens.push(f);
                }
                return;
            }
        }
        self.gens.push(g);
    }

    fn concat(&self, other: &Self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> Self {
        let mut out = self.clone();
        for &g in &other.gens {
            out.push(g, a, b);
        }
        out
    }

    fn label(&self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> String {
        if self.gens.is_empty() {
            format!("1({}⊛{})", a.objects[self.src.0 .0], b.objects[self.src.1 .0])
        } else {
            self.gens
                .iter()
                .map(|g| g.label(a, b))
                .collect::<Vec<_>>()
                .join(";")
        }
    }
}

// ---------------------------------------------------------------------------
// Square words
// ---------------------------------------------------------------------------

/// A generating square, all of whose constituents are nonidentity cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum SqGen {
    /// A square of `A` whiskered by an object of `B`.
    SqA(SqId, ObjId),
    /// An object of `A` whiskered by a square of `B`.
    SqB(ObjId, SqId),
    /// Horizontal 1-cell of `A` against vertical 1-cell of `B`.
    HV(HId, VId),
    /// Vertical 1-cell of `A` against horizontal 1-cell of `B`.
    VH(VId, HId),
    /// Interchanger of two horizontal 1-cells (`true` = the inverse).
    HH(HId, HId, bool),
    /// Interchanger of two vertical 1-cells (`true` = the inverse).
    VV(VId, VId, bool),
}

/// A pasting word in generating squares. `IdV(p)`/`IdH(q)` are the identity
/// squares on a path; `H`/`V` are horizontal and vertical pasting rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum SqWord {
    IdV(HPath),
    IdH(VPath),
    Gen(SqGen),
    H(Vec<SqWord>),
    V(Vec<SqWord>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Frame {
    top: HPath,
    left: VPath,
    bottom: HPath,
    right: VPath,
}

/// Presentation context: the two sides plus path vocabulary helpers.
struct Pres<'x> {
    a: &'x FiniteDoubleCategory,
    b: &'x FiniteDoubleCategory,
}

impl<'x> Pres<'x> {
    fn hpath_a(&self, h: HId, y: ObjId) -> HPath {
        if is_h_id(self.a, h) {
            HPath::empty((self.a.hcell(h).src, y))
        } else {
            HPath::single(HGen::A(h, y), self.a, self.b)
        }
    }
    fn hpath_b(&self, x: ObjId, p: HId) -> HPath {
        if is_h_id(self.b, p) {
            HPath::empty((x, self.b.hcell(p).src))
        } else {
            HPath::single(HGen::B(x, p), self.a, self.b)
        }
    }
    fn vpath_a(&self, v: VId, y: ObjId) -> VPath {
        if is_v_id(self.a, v) {
            VPath::empty((self.a.vcell(v).src, y))
        } else {
            VPath::single(VGen::A(v, y), self.a, self.b)
        }
    }
    fn vpath_b(&self, x: ObjId, q: VId) -> VPath {
        if is_v_id(self.b, q) {
            VPath::empty((x, self.b.vcell(q).src))
        } else {
            VPath::single(VGen::B(x, q), self.a, self.b)
        }
    }

    fn gen_frame(&self, g: &SqGen) -> Frame {
        let (a, b) = (self.a, self.b);
        match *g {
            SqGen::SqA(s, y) => {
                let sq = a.square(s);
                Frame {
                    top: self.hpath_a(sq.top, y),
                    left: self.vpath_a(sq.left, y),
                    bottom: self.hpath_a(sq.bottom, y),
                    right: self.vpath_a(sq.right, y),
                }
            }
            SqGen::SqB(x, s) => {
                let sq = b.square(s);
                Frame {
                    top: self.hpath_b(x, sq.top),
                    left: self.vpath_b(x, sq.left),
                    bottom: self.hpath_b(x, sq.bottom),
                    right: self.vpath_b(x, sq.right),
                }
            }
            SqGen::HV(h, q) => {
                let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
                let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
                Frame {
                    top: self.hpath_a(h, y),
                    left: self.vpath_b(x, q),
                    bottom: self.hpath_a(h, y2),
                    right: self.vpath_b(x2, q),
                }
            }
            SqGen::VH(v, p) => {
                let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
                let (y, y2) = (b.hcell(p).src, b.hcell(p).tgt);
                Frame {
                    top: self.hpath_b(x, p),
                    left: self.vpath_a(v, y),
                    bottom: self.hpath_b(x2, p),
                    right: self.vpath_a(v, y2),
                }
            }
            SqGen::HH(h, p, inv) => {
                let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
                let (y, y2) = (b.hcell(p).src, b.hcell(p).tgt);
                let upper = self.hpath_b(x, p).concat(&self.hpath_a(h, y2), a, b);
                let lower = self.hpath_a(h, y).concat(&self.hpath_b(x2, p), a, b);
                let (top, bottom) = if inv { (lower, upper) } else { (upper, lower) };
                Frame {
                    top,
                    left: VPath::empty((x, y)),
                    bottom,
                    right: VPath::empty((x2, y2)),
                }
            }
            SqGen::VV(v, q, inv) => {
                let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
                let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
                let lhs = self.vpath_a(v, y).concat(&self.vpath_b(x2, q), a, b);
                let rhs = self.vpath_b(x, q).concat(&self.vpath_a(v, y2), a, b);
                let (left, right) = if inv { (rhs, lhs) } else { (lhs, rhs) };
                Frame {
                    top: HPath::empty((x, y)),
                    left,
                    bottom: HPath::empty((x2, y2)),
                    right,
                }
            }
        }
    }

    fn frame(&self, w: &SqWord) -> Frame {
        let (a, b) = (self.a, self.b);
        match w {
            SqWord::IdV(p) => Frame {
                top: p.clone(),
                left: VPath::empty(p.src),
                bottom: p.clone(),
                right: VPath::empty(p.tgt(a, b)),
            },
            SqWord::IdH(q) => Frame {
                top: HPath::empty(q.src),
                left: q.clone(),
                bottom: HPath::empty(q.tgt(a, b)),
                right: q.clone(),
            },
            SqWord::Gen(g) => self.gen_frame(g),
            SqWord::H(items) => {
                let frames: Vec<Frame> = items.iter().map(|i| self.frame(i)).collect();
                let mut top = frames[0].top.clone();
                let mut bottom = frames[0].bottom.clone();
                for f in &frames[1..] {
                    top = top.concat(&f.top, a, b);
                    bottom = bottom.concat(&f.bottom, a, b);
                }
                Frame {
                    top,
                    left: frames[0].left.clone(),
                    bottom,
                    right: frames.last().unwrap().right.clone(),
                }
            }
            SqWord::V(items) => {
                let frames: Vec<Frame> = items.iter().map(|i| self.frame(i)).collect();
                let mut left = frames[0].left.clone();
                let mut right = frames[0].right.clone();
                for f in &frames[1..] {
                    left = left.concat(&f.left, a, b);
                    right = right.concat(&f.right, a, b);
                }
                Frame {
                    top: frames[0].top.clone(),
                    left,
                    bottom: frames.last().unwrap().bottom.clone(),
                    right,
                }
            }
        }
    }

    /// Number of generating squares in a word.
    fn size(&self, w: &SqWord) -> usize {
        match w {
            SqWord::IdV(_) | SqWord::IdH(_) => 0,
            SqWord::Gen(_) => 1,
            SqWord::H(items) | SqWord::V(items) => items.iter().map(|i| self.size(i)).sum(),
        }
    }

    /// Canonical form: flatten nests, drop pasting units, merge adjacent
    /// identity squares, collapse degenerate rows, and spell the identity
    /// square of an object as `IdV` of the empty path.
    fn normalize(&self, w: SqWord) -> SqWord {
        let (a, b) = (self.a, self.b);
        match w {
            SqWord::IdH(q) if q.gens.is_empty() => SqWord::IdV(HPath::empty(q.src)),
            SqWord::IdV(_) | SqWord::IdH(_) | SqWord::Gen(_) => w,
            SqWord::H(items) => {
                let frame = self.frame(&SqWord::H(items.clone()));
                let mut flat: Vec<SqWord> = Vec::new();
                for it in items {
                    match self.normalize(it) {
                        SqWord::H(sub) => flat.extend(sub),
                        n => flat.push(n),
                    }
                }
                flat.retain(|x| {
                    !matches!(x, SqWord::IdH(_))
                        && !matches!(x, SqWord::IdV(p) if p.gens.is_empty())
                });
                let mut merged: Vec<SqWord> = Vec::new();
                for x in flat {
                    if let (Some(SqWord::IdV(p1)), SqWord::IdV(p2)) = (merged.last(), &x) {
                        let joined = p1.concat(p2, a, b);
                        *merged.last_mut().unwrap() = SqWord::IdV(joined);
                    } else {
                        merged.push(x);
                    }
                }
                match merged.len() {
                    0 => {
                        if frame.left.gens.is_empty() {
                            SqWord::IdV(HPath::empty(frame.left.src))
                        } else {
                            SqWord::IdH(frame.left)
                        }
                    }
                    1 => merged.pop().unwrap(),
                    _ => SqWord::H(merged),
                }
            }
            SqWord::V(items) => {
                let frame = self.frame(&SqWord::V(items.clone()));
                let mut flat: Vec<SqWord> = Vec::new();
                for it in items {
                    match self.normalize(it) {
                        SqWord::V(sub) => flat.extend(sub),
                        n => flat.push(n),
                    }
                }
                flat.retain(|x| !matches!(x, SqWord::IdV(_)));
                let mut merged: Vec<SqWord> = Vec::new();
                for x in flat {
                    if let (Some(SqWord::IdH(q1)), SqWord::IdH(q2)) = (merged.last(), &x) {
                        let joined = q1.concat(q2, a, b);
                        *merged.last_mut().unwrap() = SqWord::IdH(joined);
                    } else {
                        merged.push(x);
                    }
                }
                match merged.len() {
                    0 => SqWord::IdV(frame.top),
                    1 => merged.pop().unwrap(),
                    _ => SqWord::V(merged),
                }
            }
        }
    }

    // Smart constructors: identity components degrade to identity words, so
    // the identity-absorption laws hold syntactically in the presentation.

    fn w_sq_a(&self, s: SqId, y: ObjId) -> SqWord {
        let sq = self.a.square(s);
        if self.a.sq_v_id(sq.top) == s && sq.top == sq.bottom {
            SqWord::IdV(self.hpath_a(sq.top, y))
        } else if self.a.sq_h_id(sq.left) == s && sq.left == sq.right {
            self.normalize(SqWord::IdH(self.vpath_a(sq.left, y)))
        } else {
            SqWord::Gen(SqGen::SqA(s, y))
        }
    }

    fn w_sq_b(&self, x: ObjId, s: SqId) -> SqWord {
        let sq = self.b.square(s);
        if self.b.sq_v_id(sq.top) == s && sq.top == sq.bottom {
            SqWord::IdV(self.hpath_b(x, sq.top))
        } else if self.b.sq_h_id(sq.left) == s && sq.left == sq.right {
            self.normalize(SqWord::IdH(self.vpath_b(x, sq.left)))
        } else {
            SqWord::Gen(SqGen::SqB(x, s))
        }
    }

    fn w_hv(&self, h: HId, q: VId) -> SqWord {
        if is_h_id(self.a, h) {
            self.normalize(SqWord::IdH(self.vpath_b(self.a.hcell(h).src, q)))
        } else if is_v_id(self.b, q) {
            SqWord::IdV(self.hpath_a(h, self.b.vcell(q).src))
        } else {
            SqWord::Gen(SqGen::HV(h, q))
        }
    }

    fn w_vh(&self, v: VId, p: HId) -> SqWord {
        if is_v_id(self.a, v) {
            SqWord::IdV(self.hpath_b(self.a.vcell(v).src, p))
        } else if is_h_id(self.b, p) {
            self.normalize(SqWord::IdH(self.vpath_a(v, self.b.hcell(p).src)))
        } else {
            SqWord::Gen(SqGen::VH(v, p))
        }
    }

    fn w_hh(&self, h: HId, p: HId, inv: bool) -> SqWord {
        if is_h_id(self.a, h) || is_h_id(self.b, p) {
            let g = SqGen::HH(h, p, inv);
            SqWord::IdV(self.gen_frame(&g).top)
        } else {
            SqWord::Gen(SqGen::HH(h, p, inv))
        }
    }

    fn w_vv(&self, v: VId, q: VId, inv: bool) -> SqWord {
        if is_v_id(self.a, v) || is_v_id(self.b, q) {
            let g = SqGen::VV(v, q, inv);
            let left = self.gen_frame(&g).left;
            self.normalize(SqWord::IdH(left))
        } else {
            SqWord::Gen(SqGen::VV(v, q, inv))
        }
    }

    fn word_label(&self, w: &SqWord) -> String {
        let (a, b) = (self.a, self.b);
        match w {
            SqWord::IdV(p) => format!("1v[{}]", p.label(a, b)),
            SqWord::IdH(q) => format!("1h[{}]", q.label(a, b)),
            SqWord::Gen(g) => match g {
                SqGen::SqA(s, y) => format!("{}⊛{}", a.square(*s).name, b.objects[y.0]),
                SqGen::SqB(x, s) => format!("{}⊛{}", a.objects[x.0], b.square(*s).name),
                SqGen::HV(h, q) => format!("{}⊛{}", a.hcell(*h).name, b.vcell(*q).name),
                SqGen::VH(v, p) => format!("{}⊛{}", a.vcell(*v).name, b.hcell(*p).name),
                SqGen::HH(h, p, inv) => format!(
                    "χ{}({},{})",
                    if *inv { "⁻¹" } else { "" },
                    a.hcell(*h).name,
                    b.hcell(*p).name
                ),
                SqGen::VV(v, q, inv) => format!(
                    "ξ{}({},{})",
                    if *inv { "⁻¹" } else { "" },
                    a.vcell(*v).name,
                    b.vcell(*q).name
                ),
            },
            SqWord::H(items) => format!(
                "({})",
                items.iter().map(|i| self.word_label(i)).collect::<Vec<_>>().join(";")
            ),
            SqWord::V(items) => format!(
                "({})",
                items.iter().map(|i| self.word_label(i)).collect::<Vec<_>>().join("/")
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// Word-problem engine
// ---------------------------------------------------------------------------

struct Engine<'x> {
    p: Pres<'x>,
    cap: usize,
    words: Vec<SqWord>,
    frames: Vec<Frame>,
    index: BTreeMap<SqWord, usize>,
    parent: Vec<usize>,
    comp_h: BTreeMap<(usize, usize), usize>,
    comp_v: BTreeMap<(usize, usize), usize>,
}

impl<'x> Engine<'x> {
    fn add(&mut self, w: SqWord) -> usize {
        debug_assert_eq!(self.p.normalize(w.clone()), w);
        if let Some(&i) = self.index.get(&w) {
            return i;
        }
        let i = self.words.len();
        self.frames.push(self.p.frame(&w));
        self.index.insert(w.clone(), i);
        self.words.push(w);
        self.parent.push(i);
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Merge two classes; frames of identified words must agree.
    fn union(&mut self, i: usize, j: usize) -> Result<bool> {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return Ok(false);
        }
        if self.frames[ri] != self.frames[rj] {
            return Err(Error::structure(format!(
                "presentation relation equates squares with different frames: {} vs {}",
                self.p.word_label(&self.words[i]),
                self.p.word_label(&self.words[j])
            )));
        }
        self.parent[ri.max(rj)] = ri.min(rj);
        Ok(true)
    }

    /// Record a relation whose two sides are arbitrary words; sides larger
    /// than the cap abort with the unbounded report.
    fn relate(&mut self, lhs: SqWord, rhs: SqWord) -> std::result::Result<bool, Realization> {
        let l = self.p.normalize(lhs);
        let r = self.p.normalize(rhs);
        for side in [&l, &r] {
            if self.p.size(side) > self.cap {
                return Err(Realization::Unbounded(format!(
                    "a defining relation needs a pasting of {} generating squares, \
                     which exceeds the depth bound {}",
                    self.p.size(side),
                    self.cap
                )));
            }
        }
        let (i, j) = (self.add(l), self.add(r));
        match self.union(i, j) {
            Ok(changed) => Ok(changed),
            Err(e) => Err(Realization::Unbounded(e.to_string())),
        }
    }
}

// ---------------------------------------------------------------------------
// Realization
// ---------------------------------------------------------------------------

/// Build the tensor of `a` and `b`, bounding 1-cell paths and square pasting
/// words by `max_depth` generators.
pub fn realize_tensor(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    max_depth: usize,
    budget: &Budget,
) -> Result<Realization> {
    let p = Pres { a, b };

    // Horizontal and vertical 1-cells: normal-form generator paths, closed
    // under composition because fusing never lengthens a path.
    let mut hgens: Vec<HGen> = Vec::new();
    for h in a.h_ids().filter(|&h| !is_h_id(a, h)) {
        for y in b.obj_ids() {
            hgens.push(HGen::A(h, y));
        }
    }
    for x in a.obj_ids() {
        for pc in b.h_ids().filter(|&pc| !is_h_id(b, pc)) {
            hgens.push(HGen::B(x, pc));
        }
    }
    let mut vgens: Vec<VGen> = Vec::new();
    for v in a.v_ids().filter(|&v| !is_v_id(a, v)) {
        for y in b.obj_ids() {
            vgens.push(VGen::A(v, y));
        }
    }
    for x in a.obj_ids() {
        for q in b.v_ids().filter(|&q| !is_v_id(b, q)) {
            vgens.push(VGen::B(x, q));
        }
    }

    let hpaths = match enumerate_paths(a, b, &hgens, max_depth, budget)? {
        Ok(set) => set,
        Err(u) => return Ok(u),
    };
    let vpaths = match enumerate_paths(a, b, &vgens, max_depth, budget)? {
        Ok(set) => set,
        Err(u) => return Ok(u),
    };
    let hpath_id: BTreeMap<&HPath, HId> =
        hpaths.iter().enumerate().map(|(i, pp)| (pp, HId(i))).collect();
    let vpath_id: BTreeMap<&VPath, VId> =
        vpaths.iter().enumerate().map(|(i, pp)| (pp, VId(i))).collect();

    let mut eng = Engine {
        p,
        cap: max_depth,
        words: vec![],
        frames: vec![],
        index: BTreeMap::new(),
        parent: vec![],
        comp_h: BTreeMap::new(),
        comp_v: BTreeMap::new(),
    };

    // Vocabulary: identity squares on every path, plus every generator word.
    for pp in &hpaths {
        eng.add(SqWord::IdV(pp.clone()));
    }
    for q in &vpaths {
        let w = eng.p.normalize(SqWord::IdH(q.clone()));
        eng.add(w);
    }
    for s in a.sq_ids() {
        for y in b.obj_ids() {
            let w = eng.p.w_sq_a(s, y);
            eng.add(w);
        }
    }
    for x in a.obj_ids() {
        for s in b.sq_ids() {
            let w = eng.p.w_sq_b(x, s);
            eng.add(w);
        }
    }
    for h in a.h_ids() {
        for q in b.v_ids() {
            let w = eng.p.w_hv(h, q);
            eng.add(w);
        }
        for pc in b.h_ids() {
            for inv in [false, true] {
                let w = eng.p.w_hh(h, pc, inv);
                eng.add(w);
            }
        }
    }
    for v in a.v_ids() {
        for pc in b.h_ids() {
            let w = eng.p.w_vh(v, pc);
            eng.add(w);
        }
        for q in b.v_ids() {
            for inv in [false, true] {
                let w = eng.p.w_vv(v, q, inv);
                eng.add(w);
            }
        }
    }

    // Structural relations.
    match seed_relations(&mut eng, a, b, budget)? {
        Ok(()) => {}
        Err(u) => return Ok(u),
    }

    // Fixpoint: close the vocabulary under bounded pasting, keep adding
    // interchange instances, and propagate the congruence.
    loop {
        budget.charge(1, "tensor realization")?;
        let mut changed = false;

        // Bounded pasting closure.
        let n = eng.words.len();
        for i in 0..n {
            for j in 0..n {
                budget.charge(1, "tensor realization")?;
                if eng.frames[i].right == eng.frames[j].left
                    && !eng.comp_h.contains_key(&(i, j))
                {
                    let w = eng
                        .p
                        .normalize(SqWord::H(vec![eng.words[i].clone(), eng.words[j].clone()]));
                    if eng.p.size(&w) <= max_depth {
                        let k = eng.add(w);
                        eng.comp_h.insert((i, j), k);
                        changed = true;
                    }
                }
                if eng.frames[i].bottom == eng.frames[j].top
                    && !eng.comp_v.contains_key(&(i, j))
                {
                    let w = eng
                        .p
                        .normalize(SqWord::V(vec![eng.words[i].clone(), eng.words[j].clone()]));
                    if eng.p.size(&w) <= max_depth {
                        let k = eng.add(w);
                        eng.comp_v.insert((i, j), k);
                        changed = true;
                    }
                }
            }
        }

        // Middle-four interchange on every composable 2×2 grid of words.
        let n = eng.words.len();
        for i1 in 0..n {
            for i2 in 0..n {
                if eng.frames[i1].right != eng.frames[i2].left {
                    continue;
                }
                for i3 in 0..n {
                    if eng.frames[i1].bottom != eng.frames[i3].top {
                        continue;
                    }
                    for i4 in 0..n {
                        budget.charge(1, "tensor realization")?;
                        if eng.frames[i3].right != eng.frames[i4].left
                            || eng.frames[i2].bottom != eng.frames[i4].top
                        {
                            continue;
                        }
                        let rows = SqWord::V(vec![
                            SqWord::H(vec![eng.words[i1].clone(), eng.words[i2].clone()]),
                            SqWord::H(vec![eng.words[i3].clone(), eng.words[i4].clone()]),
                        ]);
                        let cols = SqWord::H(vec![
                            SqWord::V(vec![eng.words[i1].clone(), eng.words[i3].clone()]),
                            SqWord::V(vec![eng.words[i2].clone(), eng.words[i4].clone()]),
                        ]);
                        let rows = eng.p.normalize(rows);
                        let cols = eng.p.normalize(cols);
                        if eng.p.size(&rows) > max_depth || eng.p.size(&cols) > max_depth {
                            continue;
                        }
                        let (wi, wj) = (eng.add(rows), eng.add(cols));
                        if eng.union(wi, wj)? {
                            changed = true;
                        }
                    }
                }
            }
        }

        // Congruence: equal classes must have equal composites.
        for table in [eng.comp_h.clone(), eng.comp_v.clone()] {
            let mut canon: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for (&(i, j), &k) in &table {
                budget.charge(1, "tensor realization")?;
                let key = (eng.find(i), eng.find(j));
                let rk = eng.find(k);
                if let Some(&prev) = canon.get(&key) {
                    if prev != rk && eng.union(prev, rk)? {
                        changed = true;
                    }
                } else {
                    canon.insert(key, rk);
                }
            }
        }

        if !changed {
            break;
        }
    }

    // Closure check: every frame-composable pair of classes must have a
    // composite witnessed inside the bounded vocabulary.
    let nwords = eng.words.len();
    let mut roots: Vec<usize> = (0..nwords).map(|i| eng.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    let class_of: BTreeMap<usize, usize> =
        roots.iter().enumerate().map(|(c, &r)| (r, c)).collect();
    let nclasses = roots.len();

    let mut class_h: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut class_v: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&(i, j), &k) in &eng.comp_h.clone() {
        let key = (class_of[&eng.find(i)], class_of[&eng.find(j)]);
        let val = class_of[&eng.find(k)];
        class_h.insert(key, val);
    }
    for (&(i, j), &k) in &eng.comp_v.clone() {
        let key = (class_of[&eng.find(i)], class_of[&eng.find(j)]);
        let val = class_of[&eng.find(k)];
        class_v.insert(key, val);
    }
    for c1 in 0..nclasses {
        for c2 in 0..nclasses {
            let (f1, f2) = (&eng.frames[roots[c1]], &eng.frames[roots[c2]]);
            if f1.right == f2.left && !class_h.contains_key(&(c1, c2)) {
                return Ok(Realization::Unbounded(format!(
                    "the horizontal composite of two squares has no pasting word \
                     within the depth bound {max_depth}"
                )));
            }
            if f1.bottom == f2.top && !class_v.contains_key(&(c1, c2)) {
                return Ok(Realization::Unbounded(format!(
                    "the vertical composite of two squares has no pasting word \
                     within the depth bound {max_depth}"
                )));
            }
        }
    }

    // Assemble the double category.
    let nb = b.objects.len();
    let obj_id = |x: ObjId, y: ObjId| ObjId(x.0 * nb + y.0);
    let mut objects = Vec::new();
    for x in a.obj_ids() {
        for y in b.obj_ids() {
            objects.push(format!("{}⊛{}", a.objects[x.0], b.objects[y.0]));
        }
    }
    let hcells: Vec<HCell> = hpaths
        .iter()
        .map(|pp| HCell {
            name: pp.label(a, b),
            src: obj_id(pp.src.0, pp.src.1),
            tgt: {
                let t = pp.tgt(a, b);
                obj_id(t.0, t.1)
            },
        })
        .collect();
    let vcells: Vec<VCell> = vpaths
        .iter()
        .map(|q| VCell {
            name: q.label(a, b),
            src: obj_id(q.src.0, q.src.1),
            tgt: {
                let t = q.tgt(a, b);
                obj_id(t.0, t.1)
            },
        })
        .collect();

    // Representative (minimal) word per class, for names and determinism.
    let finds: Vec<usize> = (0..nwords).map(|i| eng.find(i)).collect();
    let mut reps: Vec<&SqWord> = roots.iter().map(|&r| &eng.words[r]).collect();
    for i in 0..nwords {
        let c = class_of[&finds[i]];
        if eng.words[i] < *reps[c] {
            reps[c] = &eng.words[i];
        }
    }

    let squares: Vec<Square> = (0..nclasses)
        .map(|c| {
            let f = &eng.frames[roots[c]];
            Square {
                name: eng.p.word_label(reps[c]),
                top: hpath_id[&f.top],
                left: vpath_id[&f.left],
                bottom: hpath_id[&f.bottom],
                right: vpath_id[&f.right],
            }
        })
        .collect();

    let mut h_comp: BTreeMap<(HId, HId), HId> = BTreeMap::new();
    for p1 in &hpaths {
        for p2 in &hpaths {
            if p1.tgt(a, b) == p2.src {
                h_comp.insert((hpath_id[p1], hpath_id[p2]), hpath_id[&p1.concat(p2, a, b)]);
            }
        }
    }
    let mut v_comp: BTreeMap<(VId, VId), VId> = BTreeMap::new();
    for q1 in &vpaths {
        for q2 in &vpaths {
            if q1.tgt(a, b) == q2.src {
                v_comp.insert((vpath_id[q1], vpath_id[q2]), vpath_id[&q1.concat(q2, a, b)]);
            }
        }
    }
    let sq_h_comp: BTreeMap<(SqId, SqId), SqId> = class_h
        .iter()
        .map(|(&(i, j), &k)| ((SqId(i), SqId(j)), SqId(k)))
        .collect();
    let sq_v_comp: BTreeMap<(SqId, SqId), SqId> = class_v
        .iter()
        .map(|(&(i, j), &k)| ((SqId(i), SqId(j)), SqId(k)))
        .collect();

    let word_class = |w: SqWord| -> SqId {
        let i = eng.index[&w];
        SqId(class_of[&finds[i]])
    };

    let sq_v_id: Vec<SqId> = hpaths
        .iter()
        .map(|pp| word_class(SqWord::IdV(pp.clone())))
        .collect();
    let sq_h_id: Vec<SqId> = vpaths
        .iter()
        .map(|q| word_class(eng.p.normalize(SqWord::IdH(q.clone()))))
        .collect();
    let h_id: Vec<HId> = objects
        .iter()
        .enumerate()
        .map(|(o, _)| {
            let (x, y) = (ObjId(o / nb), ObjId(o % nb));
            hpath_id[&HPath::empty((x, y))]
        })
        .collect();
    let v_id: Vec<VId> = objects
        .iter()
        .enumerate()
        .map(|(o, _)| {
            let (x, y) = (ObjId(o / nb), ObjId(o % nb));
            vpath_id[&VPath::empty((x, y))]
        })
        .collect();

    let category = FiniteDoubleCategory {
        objects,
        hcells,
        vcells,
        squares,
        h_id,
        v_id,
        sq_v_id,
        sq_h_id,
        h_comp,
        v_comp,
        sq_h_comp,
        sq_v_comp,
    };
    if let Err(fs) = category.validate() {
        return Ok(Realization::Unbounded(format!(
            "the bounded quotient is not a double category at depth {max_depth}: {}",
            fs[0]
        )));
    }

    let hcell_words: Vec<((ObjId, ObjId), Vec<HStep>)> = hpaths
        .iter()
        .map(|p| (p.src, p.gens.iter().map(|&g| hgen_step(g)).collect()))
        .collect();
    let vcell_words: Vec<((ObjId, ObjId), Vec<VStep>)> = vpaths
        .iter()
        .map(|q| (q.src, q.gens.iter().map(|&g| vgen_step(g)).collect()))
        .collect();
    let square_words: Vec<CellWord> = reps.iter().map(|w| word_to_cell(w)).collect();

    // The tautological cone over the realization.
    let pres = Pres { a, b };
    let cone = TensorCone {
        a: a.clone(),
        b: b.clone(),
        c: category.clone(),
        obj_obj: a
            .obj_ids()
            .map(|x| b.obj_ids().map(|y| obj_id(x, y)).collect())
            .collect(),
        obj_h: a
            .obj_ids()
            .map(|x| b.h_ids().map(|pc| hpath_id[&pres.hpath_b(x, pc)]).collect())
            .collect(),
        obj_v: a
            .obj_ids()
            .map(|x| b.v_ids().map(|q| vpath_id[&pres.vpath_b(x, q)]).collect())
            .collect(),
        obj_sq: a
            .obj_ids()
            .map(|x| {
                b.sq_ids()
                    .map(|s| word_class(pres.w_sq_b(x, s)))
                    .collect()
            })
            .collect(),
        h_obj: a
            .h_ids()
            .map(|h| b.obj_ids().map(|y| hpath_id[&pres.hpath_a(h, y)]).collect())
            .collect(),
        v_obj: a
            .v_ids()
            .map(|v| b.obj_ids().map(|y| vpath_id[&pres.vpath_a(v, y)]).collect())
            .collect(),
        sq_obj: a
            .sq_ids()
            .map(|s| {
                b.obj_ids()
                    .map(|y| word_class(pres.w_sq_a(s, y)))
                    .collect()
            })
            .collect(),
        h_v: a
            .h_ids()
            .map(|h| {
                b.v_ids()
                    .map(|q| word_class(pres.w_hv(h, q)))
                    .collect()
            })
            .collect(),
        v_h: a
            .v_ids()
            .map(|v| {
                b.h_ids()
                    .map(|pc| word_class(pres.w_vh(v, pc)))
                    .collect()
            })
            .collect(),
        h_h: a
            .h_ids()
            .map(|h| {
                b.h_ids()
                    .map(|pc| word_class(pres.w_hh(h, pc, false)))
                    .collect()
            })
            .collect(),
        h_h_inv: a
            .h_ids()
            .map(|h| {
                b.h_ids()
                    .map(|pc| word_class(pres.w_hh(h, pc, true)))
                    .collect()
            })
            .collect(),
        v_v: a
            .v_ids()
            .map(|v| {
                b.v_ids()
                    .map(|q| word_class(pres.w_vv(v, q, false)))
                    .collect()
            })
            .collect(),
        v_v_inv: a
            .v_ids()
            .map(|v| {
                b.v_ids()
                    .map(|q| word_class(pres.w_vv(v, q, true)))
                    .collect()
            })
            .collect(),
    };
    if let Err(e) = validate_cone(&cone) {
        return Ok(Realization::Unbounded(format!(
            "the tautological pairing over the bounded quotient fails its laws \
             at depth {max_depth}: {e}"
        )));
    }

    Ok(Realization::Realized(Box::new(RealizedTensor {
        category,
        cone,
        max_depth,
        hcell_words,
        vcell_words,
        square_words,
    })))
}

/// BFS closure of normal-form paths; `Err` carries the unbounded report.
#[allow(clippy::type_complexity)]
fn enumerate_paths<G: PathGen>(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    gens: &[G],
    cap: usize,
    budget: &Budget,
) -> Result<std::result::Result<Vec<Path<G>>, Realization>> {
    let mut set: BTreeSet<Path<G>> = BTreeSet::new();
    let mut queue: VecDeque<Path<G>> = VecDeque::new();
    for x in a.obj_ids() {
        for y in b.obj_ids() {
            let e = Path::empty((x, y));
            set.insert(e.clone());
            queue.push_back(e);
        }
    }
    while let Some(path) = queue.pop_front() {
        for &g in gens {
            budget.charge(1, "tensor realization")?;
            if g.src(a, b) != path.tgt(a, b) {
                continue;
            }
            let mut next = path.clone();
            next.push(g, a, b);
            if next.gens.len() > cap {
                return Ok(Err(Realization::Unbounded(format!(
                    "1-cell paths keep growing past the depth bound {cap}"
                ))));
            }
            if set.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(Ok(set.into_iter().collect()))
}

/// The defining relation families of the presentation of `A \u{2297} B`, as
/// pairs of pasting words tagged with the family they instantiate.
#[allow(clippy::type_complexity)]
fn presentation_relations(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<Vec<(&'static str, SqWord, SqWord)>> {
    let p = Pres { a, b };
    let mut out: Vec<(&'static str, SqWord, SqWord)> = Vec::new();
    let mut fam = "invertibility";
    macro_rules! rel {
        ($l:expr, $r:expr) => {
            out.push((fam, $l, $r));
        };
    }

    // Invertibility of the interchangers.
    for h in a.h_ids() {
        for pc in b.h_ids() {
            budget.charge(1, "tensor realization")?;
            let fwd = p.w_hh(h, pc, false);
            let inv = p.w_hh(h, pc, true);
            let top = p.frame(&fwd).top;
            let bottom = p.frame(&fwd).bottom;
            rel!(SqWord::V(vec![fwd.clone(), inv.clone()]), SqWord::IdV(top));
            rel!(SqWord::V(vec![inv, fwd]), SqWord::IdV(bottom));
        }
    }
    for v in a.v_ids() {
        for q in b.v_ids() {
            budget.charge(1, "tensor realization")?;
            let fwd = p.w_vv(v, q, false);
            let inv = p.w_vv(v, q, true);
            let left = p.frame(&fwd).left;
            let right = p.frame(&fwd).right;
            rel!(SqWord::H(vec![fwd.clone(), inv.clone()]), SqWord::IdH(left));
            rel!(SqWord::H(vec![inv, fwd]), SqWord::IdH(right));
        }
    }

    fam = "slice functoriality";
    // Functoriality of each slice on squares.
    for x in a.obj_ids() {
        for (&(s, t), &st) in &b.sq_h_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_sq_b(x, st),
                SqWord::H(vec![p.w_sq_b(x, s), p.w_sq_b(x, t)])
            );
        }
        for (&(s, t), &st) in &b.sq_v_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_sq_b(x, st),
                SqWord::V(vec![p.w_sq_b(x, s), p.w_sq_b(x, t)])
            );
        }
    }
    for y in b.obj_ids() {
        for (&(s, t), &st) in &a.sq_h_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_sq_a(st, y),
                SqWord::H(vec![p.w_sq_a(s, y), p.w_sq_a(t, y)])
            );
        }
        for (&(s, t), &st) in &a.sq_v_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_sq_a(st, y),
                SqWord::V(vec![p.w_sq_a(s, y), p.w_sq_a(t, y)])
            );
        }
    }

    fam = "composite expansion";
    // Pairing with a composite 1-cell expands into a pasting.
    for h in a.h_ids() {
        let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
        for (&(q, q2), &qq) in &b.v_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_hv(h, qq),
                SqWord::V(vec![p.w_hv(h, q), p.w_hv(h, q2)])
            );
        }
        for (&(pc, pc2), &pp) in &b.h_comp {
            budget.charge(1, "tensor realization")?;
            let id_l = SqWord::IdV(p.hpath_b(x, pc));
            let id_r = SqWord::IdV(p.hpath_b(x2, pc2));
            rel!(
                p.w_hh(h, pp, false),
                SqWord::V(vec![
                    SqWord::H(vec![id_l.clone(), p.w_hh(h, pc2, false)]),
                    SqWord::H(vec![p.w_hh(h, pc, false), id_r.clone()]),
                ])
            );
            rel!(
                p.w_hh(h, pp, true),
                SqWord::V(vec![
                    SqWord::H(vec![p.w_hh(h, pc, true), id_r]),
                    SqWord::H(vec![id_l, p.w_hh(h, pc2, true)]),
                ])
            );
        }
    }
    for (&(h, h2), &hh) in &a.h_comp {
        for q in b.v_ids() {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_hv(hh, q),
                SqWord::H(vec![p.w_hv(h, q), p.w_hv(h2, q)])
            );
        }
        for pc in b.h_ids() {
            budget.charge(1, "tensor realization")?;
            let (y, y2) = (b.hcell(pc).src, b.hcell(pc).tgt);
            let id_l = SqWord::IdV(p.hpath_a(h, y));
            let id_r = SqWord::IdV(p.hpath_a(h2, y2));
            rel!(
                p.w_hh(hh, pc, false),
                SqWord::V(vec![
                    SqWord::H(vec![p.w_hh(h, pc, false), id_r.clone()]),
                    SqWord::H(vec![id_l.clone(), p.w_hh(h2, pc, false)]),
                ])
            );
            rel!(
                p.w_hh(hh, pc, true),
                SqWord::V(vec![
                    SqWord::H(vec![id_l, p.w_hh(h2, pc, true)]),
                    SqWord::H(vec![p.w_hh(h, pc, true), id_r]),
                ])
            );
        }
    }
    for v in a.v_ids() {
        let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
        for (&(pc, pc2), &pp) in &b.h_comp {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_vh(v, pp),
                SqWord::H(vec![p.w_vh(v, pc), p.w_vh(v, pc2)])
            );
        }
        for (&(q, q2), &qq) in &b.v_comp {
            budget.charge(1, "tensor realization")?;
            let id_t = p.normalize(SqWord::IdH(p.vpath_b(x, q)));
            let id_b = p.normalize(SqWord::IdH(p.vpath_b(x2, q2)));
            rel!(
                p.w_vv(v, qq, false),
                SqWord::H(vec![
                    SqWord::V(vec![p.w_vv(v, q, false), id_b.clone()]),
                    SqWord::V(vec![id_t.clone(), p.w_vv(v, q2, false)]),
                ])
            );
            rel!(
                p.w_vv(v, qq, true),
                SqWord::H(vec![
                    SqWord::V(vec![id_t, p.w_vv(v, q2, true)]),
                    SqWord::V(vec![p.w_vv(v, q, true), id_b]),
                ])
            );
        }
    }
    for (&(v, v2), &vv) in &a.v_comp {
        for pc in b.h_ids() {
            budget.charge(1, "tensor realization")?;
            rel!(
                p.w_vh(vv, pc),
                SqWord::V(vec![p.w_vh(v, pc), p.w_vh(v2, pc)])
            );
        }
        for q in b.v_ids() {
            budget.charge(1, "tensor realization")?;
            let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
            let id_t = p.normalize(SqWord::IdH(p.vpath_a(v, y)));
            let id_b = p.normalize(SqWord::IdH(p.vpath_a(v2, y2)));
            rel!(
                p.w_vv(vv, q, false),
                SqWord::H(vec![
                    SqWord::V(vec![id_t.clone(), p.w_vv(v2, q, false)]),
                    SqWord::V(vec![p.w_vv(v, q, false), id_b.clone()]),
                ])
            );
            rel!(
                p.w_vv(vv, q, true),
                SqWord::H(vec![
                    SqWord::V(vec![p.w_vv(v, q, true), id_b]),
                    SqWord::V(vec![id_t, p.w_vv(v2, q, true)]),
                ])
            );
        }
    }

    fam = "naturality";
    // Naturality of the mixed squares and interchangers against squares of
    // the other side.
    for w in b.sq_ids() {
        let sq = b.square(w);
        let (pc, q, s, r) = (sq.top, sq.left, sq.bottom, sq.right);
        for h in a.h_ids() {
            budget.charge(1, "tensor realization")?;
            let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
            rel!(
                SqWord::V(vec![
                    SqWord::H(vec![p.w_sq_b(x, w), p.w_hv(h, r)]),
                    p.w_hh(h, s, false),
                ]),
                SqWord::V(vec![
                    p.w_hh(h, pc, false),
                    SqWord::H(vec![p.w_hv(h, q), p.w_sq_b(x2, w)]),
                ])
            );
        }
        for v in a.v_ids() {
            budget.charge(1, "tensor realization")?;
            let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
            rel!(
                SqWord::H(vec![
                    p.w_vv(v, q, false),
                    SqWord::V(vec![p.w_sq_b(x, w), p.w_vh(v, s)]),
                ]),
                SqWord::H(vec![
                    SqWord::V(vec![p.w_vh(v, pc), p.w_sq_b(x2, w)]),
                    p.w_vv(v, r, false),
                ])
            );
        }
    }
    for w in a.sq_ids() {
        let sq = a.square(w);
        let (pc, q, s, r) = (sq.top, sq.left, sq.bottom, sq.right);
        for h in b.h_ids() {
            budget.charge(1, "tensor realization")?;
            let (x, x2) = (b.hcell(h).src, b.hcell(h).tgt);
            rel!(
                SqWord::V(vec![
                    SqWord::H(vec![p.w_vh(q, h), p.w_sq_a(w, x2)]),
                    p.w_hh(s, h, false),
                ]),
                SqWord::V(vec![
                    p.w_hh(pc, h, false),
                    SqWord::H(vec![p.w_sq_a(w, x), p.w_vh(r, h)]),
                ])
            );
        }
        for v in b.v_ids() {
            budget.charge(1, "tensor realization")?;
            let (x, x2) = (b.vcell(v).src, b.vcell(v).tgt);
            rel!(
                SqWord::H(vec![
                    p.w_vv(q, v, false),
                    SqWord::V(vec![p.w_hv(pc, v), p.w_sq_a(w, x2)]),
                ]),
                SqWord::H(vec![
                    SqWord::V(vec![p.w_sq_a(w, x), p.w_hv(s, v)]),
                    p.w_vv(r, v, false),
                ])
            );
        }
    }

    let _ = fam;
    Ok(out)
}

/// Seed the defining relations of the presentation into the engine.
fn seed_relations(
    eng: &mut Engine,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<std::result::Result<(), Realization>> {
    for (_, lhs, rhs) in presentation_relations(a, b, budget)? {
        match eng.relate(lhs, rhs) {
            Ok(_) => {}
            Err(u) => return Ok(Err(u)),
        }
    }
    Ok(Ok(()))
}


/// Check the universal property of a realization against a codomain `c`:
/// postcomposing the tautological cone with functors out of the realization
/// must hit every cone over `(A, B; c)` exactly once.
pub fn certify_realization(
    rt: &RealizedTensor,
    c: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<()> {
    let cones = enumerate_cones(&rt.cone.a, &rt.cone.b, c, budget)?;
    let funs = enumerate_functors(&rt.category, c, budget)?;
    if funs.len() != cones.len() {
        return Err(Error::structure(format!(
            "universal property fails: {} functors out of the realization but {} cones",
            funs.len(),
            cones.len()
        )));
    }
    let mut remaining: Vec<TensorCone> = cones;
    for f in &funs {
        let induced = cone_postcompose(&rt.cone, f, c);
        match remaining.iter().position(|cn| *cn == induced) {
            Some(i) => {
                remaining.swap_remove(i);
            }
            None => {
                return Err(Error::structure(
                    "universal property fails: a functor induces a cone that is \
                     missing or duplicated",
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::iso::is_isomorphic;
    use crate::dbl::zoo;

    fn realized(
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
        depth: usize,
    ) -> RealizedTensor {
        let budget = Budget::default();
        match realize_tensor(a, b, depth, &budget).unwrap() {
            Realization::Realized(rt) => *rt,
            Realization::Unbounded(why) => panic!("unexpectedly unbounded: {why}"),
        }
    }

    #[test]
    fn unit_is_neutral_on_either_side() {
        let unit = zoo::terminal();
        for d in [zoo::terminal(), zoo::free_arrow_h(), zoo::generator()] {
            let left = realized(&unit, &d, 2);
            assert!(is_isomorphic(&left.category, &d));
            let right = realized(&d, &unit, 2);
            assert!(is_isomorphic(&right.category, &d));
        }
    }

    #[test]
    fn arrow_squared_has_the_expected_cells() {
        let ah = zoo::free_arrow_h();
        let rt = realized(&ah, &ah, 2);
        assert_eq!(rt.category.objects.len(), 4);
        assert_eq!(rt.category.hcells.len(), 10);
        assert_eq!(rt.category.vcells.len(), 4);
        // Ten identity squares plus one invertible interchanger pair.
        assert_eq!(rt.category.squares.len(), 12);
    }

    #[test]
    fn arrow_squared_is_certified_against_two_codomains() {
        let ah = zoo::free_arrow_h();
        let rt = realized(&ah, &ah, 2);
        let budget = Budget::default();
        certify_realization(&rt, &zoo::free_arrow_h(), &budget).unwrap();
        certify_realization(&rt, &zoo::generator(), &budget).unwrap();
    }

    #[test]
    fn depth_one_is_reported_as_unbounded() {
        let ah = zoo::free_arrow_h();
        let budget = Budget::default();
        match realize_tensor(&ah, &ah, 1, &budget).unwrap() {
            Realization::Unbounded(why) => {
                assert!(why.contains("depth bound 1"), "{why}");
            }
            Realization::Realized(_) => panic!("expected an unbounded report"),
        }
    }

    #[test]
    fn presentation_generator_counts_are_as_expected() {
        let budget = Budget::default();
        let g = zoo::generator();
        let prez = build_presentation(&g, &g, &budget).unwrap();
        assert_eq!(prez.objects.len(), 16);
        assert_eq!(prez.h_generators.len(), 16);
        assert_eq!(prez.v_generators.len(), 16);
        assert!(!prez.relations.is_empty());

        // Tensoring with the unit contributes no generators of its own: the
        // generators correspond to the non-identity cells of the other
        // factor and there are no interchangers.
        let unit = zoo::terminal();
        let prez = build_presentation(&unit, &g, &budget).unwrap();
        assert_eq!(prez.objects.len(), g.objects.len());
        let nonid_h = g.h_ids().filter(|&h| !is_h_id(&g, h)).count();
        let nonid_v = g.v_ids().filter(|&v| !is_v_id(&g, v)).count();
        assert_eq!(prez.h_generators.len(), nonid_h);
        assert_eq!(prez.v_generators.len(), nonid_v);
        assert!(prez
            .square_generators
            .iter()
            .all(|l| !l.contains('χ') && !l.contains('ξ')));
    }

    #[test]
    fn presentation_relations_are_boundary_well_formed() {
        let budget = Budget::default();
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        let p = Pres { a: &ah, b: &av };
        let rels = presentation_relations(&ah, &av, &budget).unwrap();
        assert!(!rels.is_empty());
        for (family, lhs, rhs) in rels {
            let l = p.normalize(lhs);
            let r = p.normalize(rhs);
            assert_eq!(p.frame(&l), p.frame(&r), "family {family}");
        }
    }

    #[test]
    fn evaluation_words_recover_every_comparison_functor() {
        let ah = zoo::free_arrow_h();
        let rt = realized(&ah, &ah, 2);
        // The tautological cone evaluates to the identity functor.
        let id = functor_from_cone(&rt, &rt.cone).unwrap();
        assert_eq!(id, DoubleFunctor::identity(&rt.category));
        // Pushing the tautological cone forward along the functor evaluated
        // on any other cone recovers that cone, so evaluation inverts
        // postcomposition.
        let budget = Budget::default();
        for cone in enumerate_cones(&ah, &ah, &ah, &budget).unwrap() {
            let f = functor_from_cone(&rt, &cone).unwrap();
            assert_eq!(cone_postcompose(&rt.cone, &f, &ah), cone);
        }
    }

    #[test]
    fn mixed_arrow_tensor_is_certified() {
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        let rt = realized(&ah, &av, 2);
        let budget = Budget::default();
        certify_realization(&rt, &zoo::free_arrow_h(), &budget).unwrap();
        certify_realization(&rt, &zoo::generator(), &budget).unwrap();
    }
}

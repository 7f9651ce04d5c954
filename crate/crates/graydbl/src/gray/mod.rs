//! Bifunctorial cones and the currying presentation of the tensor product.
//!
//! A [`TensorCone`] over domains `A`, `B` with codomain `C` assigns to every
//! pair of cells, one from each domain with total dimension at most two, a
//! cell of `C` of that dimension. Pairs of 1-cells of the same direction get
//! invertible "interchanger" squares. The conditions on such an assignment
//! (checked by [`validate_cone`]) are exactly those making the curried
//! assignment `X ↦ X⊛−` a double functor `A → ⟦B,C⟧`, so valid cones are in
//! bijection with such functors; [`curry_cone`] and [`uncurry_functor`]
//! realize the bijection and [`enumerate_cones`] lists all cones directly,
//! independently of the hom construction.
//!
//! The submodules build on this: [`realize`] produces the representing double
//! category of the cone functor from a generators-and-relations presentation
//! (bounded and certified), and [`coherence`] assembles the associativity,
//! unit and symmetry comparison maps together with their coherence checks.

pub mod coherence;
pub mod realize;

use crate::budget::Budget;
use crate::dbl::{FiniteDoubleCategory, HId, ObjId, SqId, VId};
use crate::error::{AxiomFailure, Error, Result};
use crate::functor::{enumerate_functors, DoubleFunctor};
use crate::hom::{
    compose_hpseudo, compose_vpseudo, enumerate_hpseudos, enumerate_modifications,
    enumerate_vpseudos, identity_hpseudo, identity_vpseudo, HPseudo, HomDouble, Modification,
    VPseudo,
};
use serde::Serialize;

/// A separately-functorial assignment of `C`-cells to pairs of cells from `A`
/// and `B`, with invertible interchangers for parallel 1-cell pairs.
///
/// Table orientation: in every mixed table the first index runs over cells of
/// `A`, the second over cells of `B`. `h_h[h][p]` is the interchanger square
/// rewriting "`B`-side first, then `A`-side" (its top is `(X⊛p) ; (h⊛Y′)`) to
/// "`A`-side first, then `B`-side" (bottom `(h⊛Y) ; (X′⊛p)`); `h_h_inv` is its
/// vertical inverse. `v_v[v][q]` has identity horizontal edges, left side
/// `(v⊛Y) ; (X′⊛q)` and right side `(X⊛q) ; (v⊛Y′)`; `v_v_inv` is its
/// horizontal inverse.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TensorCone {
    pub a: FiniteDoubleCategory,
    pub b: FiniteDoubleCategory,
    pub c: FiniteDoubleCategory,
    /// `X ⊛ Y`, indexed `[x][y]`.
    pub obj_obj: Vec<Vec<ObjId>>,
    /// `X ⊛ p` for `p` a horizontal 1-cell of `B`.
    pub obj_h: Vec<Vec<HId>>,
    /// `X ⊛ q` for `q` a vertical 1-cell of `B`.
    pub obj_v: Vec<Vec<VId>>,
    /// `X ⊛ ω` for `ω` a square of `B`.
    pub obj_sq: Vec<Vec<SqId>>,
    /// `h ⊛ Y` for `h` a horizontal 1-cell of `A`.
    pub h_obj: Vec<Vec<HId>>,
    /// `v ⊛ Y` for `v` a vertical 1-cell of `A`.
    pub v_obj: Vec<Vec<VId>>,
    /// `ω ⊛ Y` for `ω` a square of `A`.
    pub sq_obj: Vec<Vec<SqId>>,
    /// `h ⊛ q`: top `h⊛Y`, left `X⊛q`, bottom `h⊛Y′`, right `X′⊛q`.
    pub h_v: Vec<Vec<SqId>>,
    /// `v ⊛ p`: top `X⊛p`, left `v⊛Y`, bottom `X′⊛p`, right `v⊛Y′`.
    pub v_h: Vec<Vec<SqId>>,
    /// Interchanger `h ⊛ p` (vertically invertible).
    pub h_h: Vec<Vec<SqId>>,
    pub h_h_inv: Vec<Vec<SqId>>,
    /// Interchanger `v ⊛ q` (horizontally invertible).
    pub v_v: Vec<Vec<SqId>>,
    pub v_v_inv: Vec<Vec<SqId>>,
}

impl TensorCone {
    /// The double functor `X ⊛ − : B → C`.
    pub fn functor_at(&self, x: ObjId) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj_obj[x.0].clone(),
            h: self.obj_h[x.0].clone(),
            v: self.obj_v[x.0].clone(),
            sq: self.obj_sq[x.0].clone(),
        }
    }

    /// The double functor `− ⊛ Y : A → C`.
    pub fn co_functor_at(&self, y: ObjId) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj_obj.iter().map(|row| row[y.0]).collect(),
            h: self.h_obj.iter().map(|row| row[y.0]).collect(),
            v: self.v_obj.iter().map(|row| row[y.0]).collect(),
            sq: self.sq_obj.iter().map(|row| row[y.0]).collect(),
        }
    }

    /// The horizontal pseudotransformation `h ⊛ − : (X⊛−) → (X′⊛−)`.
    pub fn hpseudo_at(&self, h: HId) -> HPseudo {
        let cell = self.a.hcell(h);
        HPseudo {
            source: self.functor_at(cell.src),
            target: self.functor_at(cell.tgt),
            comp_obj: self.h_obj[h.0].clone(),
            comp_v: self.h_v[h.0].clone(),
            comp_h: self.h_h[h.0].clone(),
            comp_h_inv: self.h_h_inv[h.0].clone(),
        }
    }

    /// The vertical pseudotransformation `v ⊛ − : (X⊛−) → (X′⊛−)`.
    pub fn vpseudo_at(&self, v: VId) -> VPseudo {
        let cell = self.a.vcell(v);
        VPseudo {
            source: self.functor_at(cell.src),
            target: self.functor_at(cell.tgt),
            comp_obj: self.v_obj[v.0].clone(),
            comp_h: self.v_h[v.0].clone(),
            comp_v: self.v_v[v.0].clone(),
            comp_v_inv: self.v_v_inv[v.0].clone(),
        }
    }

    /// The modification `ω ⊛ −` framed by the pseudos of `ω`'s boundary.
    pub fn modification_at(&self, w: SqId) -> Modification {
        let sq = self.a.square(w);
        Modification {
            top: self.hpseudo_at(sq.top),
            left: self.vpseudo_at(sq.left),
            bottom: self.hpseudo_at(sq.bottom),
            right: self.vpseudo_at(sq.right),
            comp: self.sq_obj[w.0].clone(),
        }
    }
}

fn table_shape_ok<T>(table: &[Vec<T>], rows: usize, cols: usize) -> bool {
    table.len() == rows && table.iter().all(|r| r.len() == cols)
}

/// Check all structural and law requirements of a cone.
///
/// Failures are grouped by family: `(i)` separate functoriality in each
/// variable, `(invertibility)` of the interchangers, `(v)` identity
/// absorption, `(vi)` composition expansion, `(vii)` the four naturality
/// families. Shape or frame mismatches abort early as structural errors.
pub fn validate_cone(cone: &TensorCone) -> Result<()> {
    let (a, b, c) = (&cone.a, &cone.b, &cone.c);
    let (na, nb) = (a.objects.len(), b.objects.len());
    let shapes = [
        table_shape_ok(&cone.obj_obj, na, nb),
        table_shape_ok(&cone.obj_h, na, b.hcells.len()),
        table_shape_ok(&cone.obj_v, na, b.vcells.len()),
        table_shape_ok(&cone.obj_sq, na, b.squares.len()),
        table_shape_ok(&cone.h_obj, a.hcells.len(), nb),
        table_shape_ok(&cone.v_obj, a.vcells.len(), nb),
        table_shape_ok(&cone.sq_obj, a.squares.len(), nb),
        table_shape_ok(&cone.h_v, a.hcells.len(), b.vcells.len()),
        table_shape_ok(&cone.v_h, a.vcells.len(), b.hcells.len()),
        table_shape_ok(&cone.h_h, a.hcells.len(), b.hcells.len()),
        table_shape_ok(&cone.h_h_inv, a.hcells.len(), b.hcells.len()),
        table_shape_ok(&cone.v_v, a.vcells.len(), b.vcells.len()),
        table_shape_ok(&cone.v_v_inv, a.vcells.len(), b.vcells.len()),
    ];
    if shapes.iter().any(|ok| !ok) {
        return Err(Error::structure("cone tables have the wrong shape"));
    }

    // Frames of the mixed squares. Any mismatch makes the law pastings below
    // meaningless, so frame problems are structural and abort.
    for h in a.h_ids() {
        let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
        for q in b.v_ids() {
            let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
            let sq = c.square(cone.h_v[h.0][q.0]);
            if sq.top != cone.h_obj[h.0][y.0]
                || sq.left != cone.obj_v[x.0][q.0]
                || sq.bottom != cone.h_obj[h.0][y2.0]
                || sq.right != cone.obj_v[x2.0][q.0]
            {
                return Err(Error::structure(format!(
                    "square for ({}, {}) has the wrong frame",
                    a.hcell(h).name,
                    b.vcell(q).name
                )));
            }
        }
        for p in b.h_ids() {
            let (y, y2) = (b.hcell(p).src, b.hcell(p).tgt);
            let top = c.comp_h(cone.obj_h[x.0][p.0], cone.h_obj[h.0][y2.0]);
            let bottom = c.comp_h(cone.h_obj[h.0][y.0], cone.obj_h[x2.0][p.0]);
            let sq = c.square(cone.h_h[h.0][p.0]);
            if sq.top != top
                || sq.bottom != bottom
                || sq.left != c.v_id(cone.obj_obj[x.0][y.0])
                || sq.right != c.v_id(cone.obj_obj[x2.0][y2.0])
            {
                return Err(Error::structure(format!(
                    "interchanger for ({}, {}) has the wrong frame",
                    a.hcell(h).name,
                    b.hcell(p).name
                )));
            }
        }
    }
    for v in a.v_ids() {
        let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
        for p in b.h_ids() {
            let (y, y2) = (b.hcell(p).src, b.hcell(p).tgt);
            let sq = c.square(cone.v_h[v.0][p.0]);
            if sq.top != cone.obj_h[x.0][p.0]
                || sq.left != cone.v_obj[v.0][y.0]
                || sq.bottom != cone.obj_h[x2.0][p.0]
                || sq.right != cone.v_obj[v.0][y2.0]
            {
                return Err(Error::structure(format!(
                    "square for ({}, {}) has the wrong frame",
                    a.vcell(v).name,
                    b.hcell(p).name
                )));
            }
        }
        for q in b.v_ids() {
            let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
            let left = c.comp_v(cone.v_obj[v.0][y.0], cone.obj_v[x2.0][q.0]);
            let right = c.comp_v(cone.obj_v[x.0][q.0], cone.v_obj[v.0][y2.0]);
            let sq = c.square(cone.v_v[v.0][q.0]);
            if sq.left != left
                || sq.right != right
                || sq.top != c.h_id(cone.obj_obj[x.0][y.0])
                || sq.bottom != c.h_id(cone.obj_obj[x2.0][y2.0])
            {
                return Err(Error::structure(format!(
                    "interchanger for ({}, {}) has the wrong frame",
                    a.vcell(v).name,
                    b.vcell(q).name
                )));
            }
        }
    }

    let mut errs: Vec<AxiomFailure> = Vec::new();
    let mut fail = |law: &str, details: String| {
        errs.push(AxiomFailure {
            law: law.to_string(),
            details,
        })
    };

    // (i): both partial assignments are double functors.
    for x in a.obj_ids() {
        if let Err(fs) = cone.functor_at(x).validate(b, c) {
            for f in fs {
                fail("(i)", format!("{} ⊛ −: {}", a.objects[x.0], f));
            }
        }
    }
    for y in b.obj_ids() {
        if let Err(fs) = cone.co_functor_at(y).validate(a, c) {
            for f in fs {
                fail("(i)", format!("− ⊛ {}: {}", b.objects[y.0], f));
            }
        }
    }

    // Invertibility of the interchangers.
    for h in a.h_ids() {
        for p in b.h_ids() {
            let (s, i) = (cone.h_h[h.0][p.0], cone.h_h_inv[h.0][p.0]);
            let (top, bottom) = (c.square(s).top, c.square(s).bottom);
            if c.try_sq_v(s, i) != Some(c.sq_v_id(top))
                || c.try_sq_v(i, s) != Some(c.sq_v_id(bottom))
            {
                fail(
                    "(invertibility)",
                    format!(
                        "interchanger for ({}, {}) is not vertically invertible",
                        a.hcell(h).name,
                        b.hcell(p).name
                    ),
                );
            }
        }
    }
    for v in a.v_ids() {
        for q in b.v_ids() {
            let (s, i) = (cone.v_v[v.0][q.0], cone.v_v_inv[v.0][q.0]);
            let (left, right) = (c.square(s).left, c.square(s).right);
            if c.try_sq_h(s, i) != Some(c.sq_h_id(left))
                || c.try_sq_h(i, s) != Some(c.sq_h_id(right))
            {
                fail(
                    "(invertibility)",
                    format!(
                        "interchanger for ({}, {}) is not horizontally invertible",
                        a.vcell(v).name,
                        b.vcell(q).name
                    ),
                );
            }
        }
    }

    // (v): pairing with an identity 1-cell gives an identity square.
    for h in a.h_ids() {
        for y in b.obj_ids() {
            let id = c.sq_v_id(cone.h_obj[h.0][y.0]);
            if cone.h_v[h.0][b.v_id(y).0] != id {
                fail(
                    "(v)",
                    format!("({}, 1{}) is not an identity", a.hcell(h).name, b.objects[y.0]),
                );
            }
            if cone.h_h[h.0][b.h_id(y).0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger ({}, 1{}) is not an identity",
                        a.hcell(h).name,
                        b.objects[y.0]
                    ),
                );
            }
        }
    }
    for v in a.v_ids() {
        for y in b.obj_ids() {
            let id = c.sq_h_id(cone.v_obj[v.0][y.0]);
            if cone.v_h[v.0][b.h_id(y).0] != id {
                fail(
                    "(v)",
                    format!("({}, 1{}) is not an identity", a.vcell(v).name, b.objects[y.0]),
                );
            }
            if cone.v_v[v.0][b.v_id(y).0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger ({}, 1{}) is not an identity",
                        a.vcell(v).name,
                        b.objects[y.0]
                    ),
                );
            }
        }
    }
    for x in a.obj_ids() {
        for p in b.h_ids() {
            let id = c.sq_v_id(cone.obj_h[x.0][p.0]);
            if cone.v_h[a.v_id(x).0][p.0] != id {
                fail(
                    "(v)",
                    format!("(1{}, {}) is not an identity", a.objects[x.0], b.hcell(p).name),
                );
            }
            if cone.h_h[a.h_id(x).0][p.0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger (1{}, {}) is not an identity",
                        a.objects[x.0],
                        b.hcell(p).name
                    ),
                );
            }
        }
        for q in b.v_ids() {
            let id = c.sq_h_id(cone.obj_v[x.0][q.0]);
            if cone.h_v[a.h_id(x).0][q.0] != id {
                fail(
                    "(v)",
                    format!("(1{}, {}) is not an identity", a.objects[x.0], b.vcell(q).name),
                );
            }
            if cone.v_v[a.v_id(x).0][q.0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger (1{}, {}) is not an identity",
                        a.objects[x.0],
                        b.vcell(q).name
                    ),
                );
            }
        }
    }

    // (vi): pairing with a composite 1-cell expands as the displayed pasting.
    for h in a.h_ids() {
        let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
        for (&(q, q2), &qq) in &b.v_comp {
            if cone.h_v[h.0][qq.0] != c.paste_v(cone.h_v[h.0][q.0], cone.h_v[h.0][q2.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({}, {};{}) does not expand",
                        a.hcell(h).name,
                        b.vcell(q).name,
                        b.vcell(q2).name
                    ),
                );
            }
        }
        for (&(p, p2), &pp) in &b.h_comp {
            let row1 = c.paste_h(c.sq_v_id(cone.obj_h[x.0][p.0]), cone.h_h[h.0][p2.0]);
            let row2 = c.paste_h(cone.h_h[h.0][p.0], c.sq_v_id(cone.obj_h[x2.0][p2.0]));
            if cone.h_h[h.0][pp.0] != c.paste_v(row1, row2) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({}, {};{}) does not expand",
                        a.hcell(h).name,
                        b.hcell(p).name,
                        b.hcell(p2).name
                    ),
                );
            }
        }
    }
    for (&(h, h2), &hh) in &a.h_comp {
        for q in b.v_ids() {
            if cone.h_v[hh.0][q.0] != c.paste_h(cone.h_v[h.0][q.0], cone.h_v[h2.0][q.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({};{}, {}) does not expand",
                        a.hcell(h).name,
                        a.hcell(h2).name,
                        b.vcell(q).name
                    ),
                );
            }
        }
        for p in b.h_ids() {
            let (y, y2) = (b.hcell(p).src, b.hcell(p).tgt);
            let row1 = c.paste_h(cone.h_h[h.0][p.0], c.sq_v_id(cone.h_obj[h2.0][y2.0]));
            let row2 = c.paste_h(c.sq_v_id(cone.h_obj[h.0][y.0]), cone.h_h[h2.0][p.0]);
            if cone.h_h[hh.0][p.0] != c.paste_v(row1, row2) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({};{}, {}) does not expand",
                        a.hcell(h).name,
                        a.hcell(h2).name,
                        b.hcell(p).name
                    ),
                );
            }
        }
    }
    for v in a.v_ids() {
        let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
        for (&(p, p2), &pp) in &b.h_comp {
            if cone.v_h[v.0][pp.0] != c.paste_h(cone.v_h[v.0][p.0], cone.v_h[v.0][p2.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({}, {};{}) does not expand",
                        a.vcell(v).name,
                        b.hcell(p).name,
                        b.hcell(p2).name
                    ),
                );
            }
        }
        for (&(q, q2), &qq) in &b.v_comp {
            let col1 = c.paste_v(cone.v_v[v.0][q.0], c.sq_h_id(cone.obj_v[x2.0][q2.0]));
            let col2 = c.paste_v(c.sq_h_id(cone.obj_v[x.0][q.0]), cone.v_v[v.0][q2.0]);
            if cone.v_v[v.0][qq.0] != c.paste_h(col1, col2) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({}, {};{}) does not expand",
                        a.vcell(v).name,
                        b.vcell(q).name,
                        b.vcell(q2).name
                    ),
                );
            }
        }
    }
    for (&(v, v2), &vv) in &a.v_comp {
        for p in b.h_ids() {
            if cone.v_h[vv.0][p.0] != c.paste_v(cone.v_h[v.0][p.0], cone.v_h[v2.0][p.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({};{}, {}) does not expand",
                        a.vcell(v).name,
                        a.vcell(v2).name,
                        b.hcell(p).name
                    ),
                );
            }
        }
        for q in b.v_ids() {
            let (y, y2) = (b.vcell(q).src, b.vcell(q).tgt);
            let col1 = c.paste_v(c.sq_h_id(cone.v_obj[v.0][y.0]), cone.v_v[v2.0][q.0]);
            let col2 = c.paste_v(cone.v_v[v.0][q.0], c.sq_h_id(cone.v_obj[v2.0][y2.0]));
            if cone.v_v[vv.0][q.0] != c.paste_h(col1, col2) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({};{}, {}) does not expand",
                        a.vcell(v).name,
                        a.vcell(v2).name,
                        b.vcell(q).name
                    ),
                );
            }
        }
    }

    // (vii): the four naturality families, one per pairing of a square of one
    // domain with a 1-cell of the other.
    for w in b.sq_ids() {
        let sq = b.square(w);
        let (p, q, s, r) = (sq.top, sq.left, sq.bottom, sq.right);
        for h in a.h_ids() {
            let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
            let lhs = c.paste_v(
                c.paste_h(cone.obj_sq[x.0][w.0], cone.h_v[h.0][r.0]),
                cone.h_h[h.0][s.0],
            );
            let rhs = c.paste_v(
                cone.h_h[h.0][p.0],
                c.paste_h(cone.h_v[h.0][q.0], cone.obj_sq[x2.0][w.0]),
            );
            if lhs != rhs {
                fail(
                    "(vii)",
                    format!("naturality of ({}, −) at {}", a.hcell(h).name, sq.name),
                );
            }
        }
        for v in a.v_ids() {
            let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
            let lhs = c.paste_h(
                cone.v_v[v.0][q.0],
                c.paste_v(cone.obj_sq[x.0][w.0], cone.v_h[v.0][s.0]),
            );
            let rhs = c.paste_h(
                c.paste_v(cone.v_h[v.0][p.0], cone.obj_sq[x2.0][w.0]),
                cone.v_v[v.0][r.0],
            );
            if lhs != rhs {
                fail(
                    "(vii)",
                    format!("naturality of ({}, −) at {}", a.vcell(v).name, sq.name),
                );
            }
        }
    }
    for w in a.sq_ids() {
        let sq = a.square(w);
        let (p, q, s, r) = (sq.top, sq.left, sq.bottom, sq.right);
        for h in b.h_ids() {
            let (x, x2) = (b.hcell(h).src, b.hcell(h).tgt);
            let lhs = c.paste_v(
                c.paste_h(cone.v_h[q.0][h.0], cone.sq_obj[w.0][x2.0]),
                cone.h_h[s.0][h.0],
            );
            let rhs = c.paste_v(
                cone.h_h[p.0][h.0],
                c.paste_h(cone.sq_obj[w.0][x.0], cone.v_h[r.0][h.0]),
            );
            if lhs != rhs {
                fail(
                    "(vii)",
                    format!("naturality of (−, {}) at {}", b.hcell(h).name, sq.name),
                );
            }
        }
        for v in b.v_ids() {
            let (x, x2) = (b.vcell(v).src, b.vcell(v).tgt);
            let lhs = c.paste_h(
                cone.v_v[q.0][v.0],
                c.paste_v(cone.h_v[p.0][v.0], cone.sq_obj[w.0][x2.0]),
            );
            let rhs = c.paste_h(
                c.paste_v(cone.sq_obj[w.0][x.0], cone.h_v[s.0][v.0]),
                cone.v_v[r.0][v.0],
            );
            if lhs != rhs {
                fail(
                    "(vii)",
                    format!("naturality of (−, {}) at {}", b.vcell(v).name, sq.name),
                );
            }
        }
    }

    if errs.is_empty() {
        Ok(())
    } else {
        Err(Error::Axioms(errs))
    }
}

/// The functor `A → ⟦B,C⟧` determined by a cone.
pub fn curry_cone(cone: &TensorCone, hom_bc: &HomDouble) -> Result<DoubleFunctor> {
    let a = &cone.a;
    let mut obj = Vec::new();
    for x in a.obj_ids() {
        obj.push(hom_bc.find_functor(&cone.functor_at(x))?);
    }
    let mut h = Vec::new();
    for f in a.h_ids() {
        h.push(hom_bc.find_hpseudo(&cone.hpseudo_at(f))?);
    }
    let mut v = Vec::new();
    for f in a.v_ids() {
        v.push(hom_bc.find_vpseudo(&cone.vpseudo_at(f))?);
    }
    let mut sq = Vec::new();
    for s in a.sq_ids() {
        sq.push(hom_bc.find_mod(&cone.modification_at(s))?);
    }
    Ok(DoubleFunctor { obj, h, v, sq })
}

/// The cone determined by a functor `A → ⟦B,C⟧`.
pub fn uncurry_functor(
    f: &DoubleFunctor,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    hom_bc: &HomDouble,
) -> Result<TensorCone> {
    if f.obj.len() != a.objects.len()
        || f.h.len() != a.hcells.len()
        || f.v.len() != a.vcells.len()
        || f.sq.len() != a.squares.len()
    {
        return Err(Error::structure("functor does not match the stated domain"));
    }
    let fun = |x: ObjId| -> &DoubleFunctor { &hom_bc.functors[f.obj(x).0] };
    Ok(TensorCone {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        obj_obj: a.obj_ids().map(|x| fun(x).obj.clone()).collect(),
        obj_h: a.obj_ids().map(|x| fun(x).h.clone()).collect(),
        obj_v: a.obj_ids().map(|x| fun(x).v.clone()).collect(),
        obj_sq: a.obj_ids().map(|x| fun(x).sq.clone()).collect(),
        h_obj: a
            .h_ids()
            .map(|h| hom_bc.hpseudos[f.h(h).0].comp_obj.clone())
            .collect(),
        v_obj: a
            .v_ids()
            .map(|v| hom_bc.vpseudos[f.v(v).0].comp_obj.clone())
            .collect(),
        sq_obj: a
            .sq_ids()
            .map(|s| hom_bc.mods[f.sq(s).0].comp.clone())
            .collect(),
        h_v: a
            .h_ids()
            .map(|h| hom_bc.hpseudos[f.h(h).0].comp_v.clone())
            .collect(),
        v_h: a
            .v_ids()
            .map(|v| hom_bc.vpseudos[f.v(v).0].comp_h.clone())
            .collect(),
        h_h: a
            .h_ids()
            .map(|h| hom_bc.hpseudos[f.h(h).0].comp_h.clone())
            .collect(),
        h_h_inv: a
            .h_ids()
            .map(|h| hom_bc.hpseudos[f.h(h).0].comp_h_inv.clone())
            .collect(),
        v_v: a
            .v_ids()
            .map(|v| hom_bc.vpseudos[f.v(v).0].comp_v.clone())
            .collect(),
        v_v_inv: a
            .v_ids()
            .map(|v| hom_bc.vpseudos[f.v(v).0].comp_v_inv.clone())
            .collect(),
    })
}

/// Restrict a cone along functors into its two domains.
pub fn cone_precompose(
    cone: &TensorCone,
    u: &DoubleFunctor,
    a2: &FiniteDoubleCategory,
    w: &DoubleFunctor,
    b2: &FiniteDoubleCategory,
) -> TensorCone {
    let reindex_obj =
        |table: &Vec<Vec<ObjId>>| -> Vec<Vec<ObjId>> {
            u.obj.iter()
                .map(|&x| w.obj.iter().map(|&y| table[x.0][y.0]).collect())
                .collect()
        };
    TensorCone {
        a: a2.clone(),
        b: b2.clone(),
        c: cone.c.clone(),
        obj_obj: reindex_obj(&cone.obj_obj),
        obj_h: u
            .obj
            .iter()
            .map(|&x| w.h.iter().map(|&p| cone.obj_h[x.0][p.0]).collect())
            .collect(),
        obj_v: u
            .obj
            .iter()
            .map(|&x| w.v.iter().map(|&q| cone.obj_v[x.0][q.0]).collect())
            .collect(),
        obj_sq: u
            .obj
            .iter()
            .map(|&x| w.sq.iter().map(|&s| cone.obj_sq[x.0][s.0]).collect())
            .collect(),
        h_obj: u
            .h
            .iter()
            .map(|&h| w.obj.iter().map(|&y| cone.h_obj[h.0][y.0]).collect())
            .collect(),
        v_obj: u
            .v
            .iter()
            .map(|&v| w.obj.iter().map(|&y| cone.v_obj[v.0][y.0]).collect())
            .collect(),
        sq_obj: u
            .sq
            .iter()
            .map(|&s| w.obj.iter().map(|&y| cone.sq_obj[s.0][y.0]).collect())
            .collect(),
        h_v: u
            .h
            .iter()
            .map(|&h| w.v.iter().map(|&q| cone.h_v[h.0][q.0]).collect())
            .collect(),
        v_h: u
            .v
            .iter()
            .map(|&v| w.h.iter().map(|&p| cone.v_h[v.0][p.0]).collect())
            .collect(),
        h_h: u
            .h
            .iter()
            .map(|&h| w.h.iter().map(|&p| cone.h_h[h.0][p.0]).collect())
            .collect(),
        h_h_inv: u
            .h
            .iter()
            .map(|&h| w.h.iter().map(|&p| cone.h_h_inv[h.0][p.0]).collect())
            .collect(),
        v_v: u
            .v
            .iter()
            .map(|&v| w.v.iter().map(|&q| cone.v_v[v.0][q.0]).collect())
            .collect(),
        v_v_inv: u
            .v
            .iter()
            .map(|&v| w.v.iter().map(|&q| cone.v_v_inv[v.0][q.0]).collect())
            .collect(),
    }
}

/// Push a cone forward along a functor out of its codomain.
pub fn cone_postcompose(
    cone: &TensorCone,
    f: &DoubleFunctor,
    c2: &FiniteDoubleCategory,
) -> TensorCone {
    let on_obj = |t: &Vec<Vec<ObjId>>| t.iter().map(|r| r.iter().map(|&o| f.obj(o)).collect()).collect();
    let on_h = |t: &Vec<Vec<HId>>| t.iter().map(|r| r.iter().map(|&h| f.h(h)).collect()).collect();
    let on_v = |t: &Vec<Vec<VId>>| t.iter().map(|r| r.iter().map(|&v| f.v(v)).collect()).collect();
    let on_sq = |t: &Vec<Vec<SqId>>| t.iter().map(|r| r.iter().map(|&s| f.sq(s)).collect()).collect();
    TensorCone {
        a: cone.a.clone(),
        b: cone.b.clone(),
        c: c2.clone(),
        obj_obj: on_obj(&cone.obj_obj),
        obj_h: on_h(&cone.obj_h),
        obj_v: on_v(&cone.obj_v),
        obj_sq: on_sq(&cone.obj_sq),
        h_obj: on_h(&cone.h_obj),
        v_obj: on_v(&cone.v_obj),
        sq_obj: on_sq(&cone.sq_obj),
        h_v: on_sq(&cone.h_v),
        v_h: on_sq(&cone.v_h),
        h_h: on_sq(&cone.h_h),
        h_h_inv: on_sq(&cone.h_h_inv),
        v_v: on_sq(&cone.v_v),
        v_v_inv: on_sq(&cone.v_v_inv),
    }
}

/// The cone over `(B, A)` obtained from a cone over `(A, B)` by swapping
/// the two factors. Transposition reverses the orientation of the
/// interchangers, so the swapped tables use their inverses.
pub fn transpose_cone(cone: &TensorCone) -> TensorCone {
    fn transpose<T: Copy>(m: &[Vec<T>], rows_out: usize) -> Vec<Vec<T>> {
        (0..rows_out)
            .map(|j| m.iter().map(|r| r[j]).collect())
            .collect()
    }
    let (na_o, na_h, na_v, na_s) = (
        cone.a.objects.len(),
        cone.a.hcells.len(),
        cone.a.vcells.len(),
        cone.a.squares.len(),
    );
    let (nb_o, nb_h, nb_v, nb_s) = (
        cone.b.objects.len(),
        cone.b.hcells.len(),
        cone.b.vcells.len(),
        cone.b.squares.len(),
    );
    TensorCone {
        a: cone.b.clone(),
        b: cone.a.clone(),
        c: cone.c.clone(),
        obj_obj: transpose(&cone.obj_obj, nb_o),
        obj_h: transpose(&cone.h_obj, nb_o),
        obj_v: transpose(&cone.v_obj, nb_o),
        obj_sq: transpose(&cone.sq_obj, nb_o),
        h_obj: transpose(&cone.obj_h, nb_h),
        v_obj: transpose(&cone.obj_v, nb_v),
        sq_obj: transpose(&cone.obj_sq, nb_s),
        h_v: transpose(&cone.v_h, nb_h),
        v_h: transpose(&cone.h_v, nb_v),
        h_h: transpose(&cone.h_h_inv, nb_h),
        h_h_inv: transpose(&cone.h_h, nb_h),
        v_v: transpose(&cone.v_v_inv, nb_v),
        v_v_inv: transpose(&cone.v_v, nb_v),
    }
    .assert_shapes(na_o, na_h, na_v, na_s)
}

impl TensorCone {
    fn assert_shapes(self, na_o: usize, na_h: usize, na_v: usize, na_s: usize) -> Self {
        debug_assert!(self.obj_obj.iter().all(|r| r.len() == na_o));
        debug_assert!(self.obj_h.iter().all(|r| r.len() == na_h));
        debug_assert!(self.obj_v.iter().all(|r| r.len() == na_v));
        debug_assert!(self.obj_sq.iter().all(|r| r.len() == na_s));
        self
    }
}

/// All valid cones over `(A, B)` with codomain `C`, in a deterministic order.
///
/// The search works directly on the cone data — double functors per object of
/// `A`, pseudotransformations per 1-cell, modifications per square, each
/// constrained to agree with identities and both composition tables of `A` —
/// and never consults the composition tables of a hom double category, so its
/// count is an independent oracle for `|DblCat(A, ⟦B,C⟧)|`.
pub fn enumerate_cones(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<Vec<TensorCone>> {
    let funs = enumerate_functors(b, c, budget)?;
    if funs.is_empty() {
        return if a.objects.is_empty() {
            Ok(vec![empty_domain_cone(a, b, c)])
        } else {
            Ok(vec![])
        };
    }

    let mut out = Vec::new();
    let nobj = a.objects.len();
    let mut obj_choice = vec![0usize; nobj.max(1)];
    'outer: loop {
        if nobj > 0 {
            budget.charge(1, "cone enumeration")?;
        }
        let assignment: Vec<&DoubleFunctor> =
            (0..nobj).map(|i| &funs[obj_choice[i]]).collect();
        enumerate_cones_hcells(a, b, c, &assignment, budget, &mut out)?;
        if nobj == 0 {
            break;
        }
        for i in (0..nobj).rev() {
            obj_choice[i] += 1;
            if obj_choice[i] < funs.len() {
                continue 'outer;
            }
            obj_choice[i] = 0;
            if i == 0 {
                break 'outer;
            }
        }
    }
    Ok(out)
}

fn empty_domain_cone(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
) -> TensorCone {
    TensorCone {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        obj_obj: vec![],
        obj_h: vec![],
        obj_v: vec![],
        obj_sq: vec![],
        h_obj: vec![],
        v_obj: vec![],
        sq_obj: vec![],
        h_v: vec![],
        v_h: vec![],
        h_h: vec![],
        h_h_inv: vec![],
        v_v: vec![],
        v_v_inv: vec![],
    }
}

fn enumerate_cones_hcells(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    funs: &[&DoubleFunctor],
    budget: &Budget,
    out: &mut Vec<TensorCone>,
) -> Result<()> {
    // Candidate pseudotransformation per horizontal 1-cell of `A`; identity
    // 1-cells are forced to identity pseudos.
    let mut h_cands: Vec<Vec<HPseudo>> = Vec::new();
    for h in a.h_ids() {
        let (x, x2) = (a.hcell(h).src, a.hcell(h).tgt);
        if a.h_id(x) == h && x == x2 {
            h_cands.push(vec![identity_hpseudo(b, c, funs[x.0])]);
        } else {
            h_cands.push(enumerate_hpseudos(b, c, funs[x.0], funs[x2.0], budget)?);
        }
        if h_cands.last().unwrap().is_empty() {
            return Ok(());
        }
    }
    let mut v_cands: Vec<Vec<VPseudo>> = Vec::new();
    for v in a.v_ids() {
        let (x, x2) = (a.vcell(v).src, a.vcell(v).tgt);
        if a.v_id(x) == v && x == x2 {
            v_cands.push(vec![identity_vpseudo(b, c, funs[x.0])]);
        } else {
            v_cands.push(enumerate_vpseudos(b, c, funs[x.0], funs[x2.0], budget)?);
        }
        if v_cands.last().unwrap().is_empty() {
            return Ok(());
        }
    }

    for_each_mixed_radix(&h_cands, budget, &mut |hs: &[&HPseudo]| {
        // Functoriality over the horizontal 1-cell table of `A`.
        for (&(f, g), &fg) in &a.h_comp {
            if *hs[fg.0] != compose_hpseudo(b, c, hs[f.0], hs[g.0]) {
                return Ok(());
            }
        }
        for_each_mixed_radix(&v_cands, budget, &mut |vs: &[&VPseudo]| {
            for (&(f, g), &fg) in &a.v_comp {
                if *vs[fg.0] != compose_vpseudo(b, c, vs[f.0], vs[g.0]) {
                    return Ok(());
                }
            }
            enumerate_cones_squares(a, b, c, funs, hs, vs, budget, out)
        })
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_cones_squares(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    funs: &[&DoubleFunctor],
    hs: &[&HPseudo],
    vs: &[&VPseudo],
    budget: &Budget,
    out: &mut Vec<TensorCone>,
) -> Result<()> {
    // Candidate component vectors per square of `A`; identity squares are
    // forced to componentwise identity squares.
    let mut sq_cands: Vec<Vec<Vec<SqId>>> = Vec::new();
    for s in a.sq_ids() {
        let sq = a.square(s);
        if a.sq_v_id(sq.top) == s && sq.top == sq.bottom {
            sq_cands.push(vec![b
                .obj_ids()
                .map(|y| c.sq_v_id(hs[sq.top.0].comp_obj[y.0]))
                .collect()]);
        } else if a.sq_h_id(sq.left) == s && sq.left == sq.right {
            sq_cands.push(vec![b
                .obj_ids()
                .map(|y| c.sq_h_id(vs[sq.left.0].comp_obj[y.0]))
                .collect()]);
        } else {
            let mods = enumerate_modifications(
                b,
                c,
                hs[sq.top.0],
                vs[sq.left.0],
                hs[sq.bottom.0],
                vs[sq.right.0],
                budget,
            )?;
            sq_cands.push(mods.into_iter().map(|m| m.comp).collect());
        }
        if sq_cands.last().unwrap().is_empty() {
            return Ok(());
        }
    }

    for_each_mixed_radix(&sq_cands, budget, &mut |sqs: &[&Vec<SqId>]| {
        // Functoriality over both square composition tables of `A`
        // (modifications compose componentwise).
        for (&(s, t), &st) in &a.sq_h_comp {
            for y in b.obj_ids() {
                if sqs[st.0][y.0] != c.paste_h(sqs[s.0][y.0], sqs[t.0][y.0]) {
                    return Ok(());
                }
            }
        }
        for (&(s, t), &st) in &a.sq_v_comp {
            for y in b.obj_ids() {
                if sqs[st.0][y.0] != c.paste_v(sqs[s.0][y.0], sqs[t.0][y.0]) {
                    return Ok(());
                }
            }
        }
        out.push(TensorCone {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            obj_obj: funs.iter().map(|f| f.obj.clone()).collect(),
            obj_h: funs.iter().map(|f| f.h.clone()).collect(),
            obj_v: funs.iter().map(|f| f.v.clone()).collect(),
            obj_sq: funs.iter().map(|f| f.sq.clone()).collect(),
            h_obj: hs.iter().map(|x| x.comp_obj.clone()).collect(),
            v_obj: vs.iter().map(|y| y.comp_obj.clone()).collect(),
            sq_obj: sqs.iter().map(|m| (*m).clone()).collect(),
            h_v: hs.iter().map(|x| x.comp_v.clone()).collect(),
            v_h: vs.iter().map(|y| y.comp_h.clone()).collect(),
            h_h: hs.iter().map(|x| x.comp_h.clone()).collect(),
            h_h_inv: hs.iter().map(|x| x.comp_h_inv.clone()).collect(),
            v_v: vs.iter().map(|y| y.comp_v.clone()).collect(),
            v_v_inv: vs.iter().map(|y| y.comp_v_inv.clone()).collect(),
        });
        Ok(())
    })
}

/// Run `body` on every selection of one element per candidate list.
fn for_each_mixed_radix<T>(
    cands: &[Vec<T>],
    budget: &Budget,
    body: &mut dyn FnMut(&[&T]) -> Result<()>,
) -> Result<()> {
    let n = cands.len();
    let mut idx = vec![0usize; n.max(1)];
    loop {
        budget.charge(1, "cone enumeration")?;
        let pick: Vec<&T> = (0..n).map(|i| &cands[i][idx[i]]).collect();
        body(&pick)?;
        if n == 0 {
            return Ok(());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < cands[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;
    use crate::hom::build_hom;

    fn identity_pairing_cone(d: &FiniteDoubleCategory) -> TensorCone {
        // Domain `𝟙`: the cone whose single slice is the identity functor.
        let unit = zoo::terminal();
        TensorCone {
            a: unit.clone(),
            b: d.clone(),
            c: d.clone(),
            obj_obj: vec![d.obj_ids().collect()],
            obj_h: vec![d.h_ids().collect()],
            obj_v: vec![d.v_ids().collect()],
            obj_sq: vec![d.sq_ids().collect()],
            h_obj: vec![d.obj_ids().map(|o| d.h_id(o)).collect()],
            v_obj: vec![d.obj_ids().map(|o| d.v_id(o)).collect()],
            sq_obj: vec![d.obj_ids().map(|o| d.sq_v_id(d.h_id(o))).collect()],
            h_v: vec![d.v_ids().map(|q| d.sq_h_id(q)).collect()],
            v_h: vec![d.h_ids().map(|p| d.sq_v_id(p)).collect()],
            h_h: vec![d.h_ids().map(|p| d.sq_v_id(p)).collect()],
            h_h_inv: vec![d.h_ids().map(|p| d.sq_v_id(p)).collect()],
            v_v: vec![d.v_ids().map(|q| d.sq_h_id(q)).collect()],
            v_v_inv: vec![d.v_ids().map(|q| d.sq_h_id(q)).collect()],
        }
    }

    #[test]
    fn unit_domain_cones_are_functors() {
        let budget = Budget::default();
        let unit = zoo::terminal();
        for d in [zoo::free_arrow_h(), zoo::generator()] {
            let cone = identity_pairing_cone(&d);
            validate_cone(&cone).unwrap();
            // With domain `𝟙` there are as many cones as endofunctors of `d`
            // paired with… exactly the functors `d → d`.
            let cones = enumerate_cones(&unit, &d, &d, &budget).unwrap();
            let funs = enumerate_functors(&d, &d, &budget).unwrap();
            assert_eq!(cones.len(), funs.len());
            assert!(cones.contains(&cone));
        }
    }

    #[test]
    fn cone_counts_match_functor_counts() {
        let budget = Budget::default();
        let ah = zoo::free_arrow_h();
        let g = zoo::generator();
        for (a, b, c) in [
            (&ah, &ah, &ah),
            (&ah, &ah, &g),
            (&g, &g, &ah),
        ] {
            let cones = enumerate_cones(a, b, c, &budget).unwrap();
            for cone in &cones {
                validate_cone(cone).unwrap();
            }
            let hom = build_hom(b, c, &budget).unwrap();
            let funs = enumerate_functors(a, &hom.cat, &budget).unwrap();
            assert_eq!(cones.len(), funs.len(), "for ({:?})", (a.objects.len(),));
        }
    }

    #[test]
    fn curry_and_uncurry_are_mutually_inverse() {
        let budget = Budget::default();
        let ah = zoo::free_arrow_h();
        let g = zoo::generator();
        for (a, b, c) in [(&ah, &ah, &ah), (&g, &g, &ah)] {
            let hom = build_hom(b, c, &budget).unwrap();
            let cones = enumerate_cones(a, b, c, &budget).unwrap();
            for cone in &cones {
                let f = curry_cone(cone, &hom).unwrap();
                f.validate(a, &hom.cat).unwrap();
                let back = uncurry_functor(&f, a, b, c, &hom).unwrap();
                assert_eq!(&back, cone);
            }
            // The other direction: every functor uncurries to a valid cone
            // that curries back to it.
            for f in enumerate_functors(a, &hom.cat, &budget).unwrap() {
                let cone = uncurry_functor(&f, a, b, c, &hom).unwrap();
                validate_cone(&cone).unwrap();
                assert_eq!(curry_cone(&cone, &hom).unwrap(), f);
            }
        }
    }

    #[test]
    fn broken_interchanger_is_reported_as_invertibility_failure() {
        let d = zoo::free_arrow_h();
        let mut cone = identity_pairing_cone(&d);
        // Point one interchanger inverse at a wrong (non-inverse) square.
        let arrow = d
            .h_ids()
            .find(|&h| d.hcell(h).src != d.hcell(h).tgt)
            .unwrap();
        let other = d.sq_v_id(d.h_id(ObjId(0)));
        cone.h_h_inv[0][arrow.0] = other;
        let err = validate_cone(&cone).unwrap_err();
        match err {
            Error::Structure(_) => panic!("expected an axiom failure"),
            Error::Axioms(fs) => {
                assert!(fs.iter().any(|f| f.law == "(invertibility)"), "{fs:?}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn cone_restriction_preserves_validity() {
        let budget = Budget::default();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let cones = enumerate_cones(&ah, &ah, &ah, &budget).unwrap();
        // Restrict along the point inclusion in the first argument and the
        // identity in the second.
        let incl = DoubleFunctor {
            obj: vec![ObjId(0)],
            h: vec![ah.h_id(ObjId(0))],
            v: vec![ah.v_id(ObjId(0))],
            sq: vec![ah.sq_v_id(ah.h_id(ObjId(0)))],
        };
        let idb = DoubleFunctor::identity(&ah);
        for cone in &cones {
            let small = cone_precompose(cone, &incl, &unit, &idb, &ah);
            validate_cone(&small).unwrap();
        }
    }
}

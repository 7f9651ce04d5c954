//! Hom double categories.
//!
//! For double categories `A`, `B`, the hom double category `hom(A, B)` has
//! double functors as objects, horizontal pseudotransformations as horizontal
//! 1-cells, vertical pseudotransformations as vertical 1-cells and
//! modifications as squares. Pseudotransformations carry their invertible
//! structure squares *together with chosen inverses*; equality is
//! componentwise including the inverses.
//!
//! All constructions here are relative to fixed `dom`/`cod` categories which
//! every function takes explicitly.

use crate::budget::Budget;
use crate::dbl::category::*;
use crate::error::{AxiomFailure, Error, Result};
use crate::functor::{enumerate_functors, DoubleFunctor};

/// A horizontal pseudotransformation `source → target` between double
/// functors `A → B`.
///
/// * `comp_obj[A]`: horizontal 1-cell `F A → G A`;
/// * `comp_v[f]` for a vertical 1-cell `f: A → B`: square with frame
///   (top `comp_obj[A]`, left `F f`, bottom `comp_obj[B]`, right `G f`);
/// * `comp_h[h]` for a horizontal 1-cell `h: A → C`: vertically invertible
///   square with frame (top `F h ; comp_obj[C]`, bottom `comp_obj[A] ; G h`,
///   identity vertical sides), inverse stored in `comp_h_inv[h]`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct HPseudo {
    pub source: DoubleFunctor,
    pub target: DoubleFunctor,
    pub comp_obj: Vec<HId>,
    pub comp_v: Vec<SqId>,
    pub comp_h: Vec<SqId>,
    pub comp_h_inv: Vec<SqId>,
}

/// A vertical pseudotransformation `source → target`.
///
/// * `comp_obj[A]`: vertical 1-cell `F A → H A`;
/// * `comp_h[h]` for `h: A → C` horizontal: square with frame (top `F h`,
///   left `comp_obj[A]`, bottom `H h`, right `comp_obj[C]`);
/// * `comp_v[f]` for `f: A → B` vertical: horizontally invertible square with
///   frame (top identity, left `comp_obj[A] ; H f`, bottom identity, right
///   `F f ; comp_obj[B]`), inverse stored in `comp_v_inv[f]`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct VPseudo {
    pub source: DoubleFunctor,
    pub target: DoubleFunctor,
    pub comp_obj: Vec<VId>,
    pub comp_h: Vec<SqId>,
    pub comp_v: Vec<SqId>,
    pub comp_v_inv: Vec<SqId>,
}

/// A modification filling a frame of two horizontal (top, bottom) and two
/// vertical (left, right) pseudotransformations: one square per object of the
/// domain.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Modification {
    pub top: HPseudo,
    pub left: VPseudo,
    pub bottom: HPseudo,
    pub right: VPseudo,
    pub comp: Vec<SqId>,
}

// ---------------------------------------------------------------------------
// Identities and composites
// ---------------------------------------------------------------------------

/// The identity horizontal pseudotransformation on `f`.
pub fn identity_hpseudo(dom: &FiniteDoubleCategory, cod: &FiniteDoubleCategory, f: &DoubleFunctor) -> HPseudo {
    HPseudo {
        source: f.clone(),
        target: f.clone(),
        comp_obj: dom.obj_ids().map(|a| cod.h_id(f.obj(a))).collect(),
        comp_v: dom.v_ids().map(|v| cod.sq_h_id(f.v(v))).collect(),
        comp_h: dom.h_ids().map(|h| cod.sq_v_id(f.h(h))).collect(),
        comp_h_inv: dom.h_ids().map(|h| cod.sq_v_id(f.h(h))).collect(),
    }
}

/// The identity vertical pseudotransformation on `f`.
pub fn identity_vpseudo(dom: &FiniteDoubleCategory, cod: &FiniteDoubleCategory, f: &DoubleFunctor) -> VPseudo {
    VPseudo {
        source: f.clone(),
        target: f.clone(),
        comp_obj: dom.obj_ids().map(|a| cod.v_id(f.obj(a))).collect(),
        comp_h: dom.h_ids().map(|h| cod.sq_v_id(f.h(h))).collect(),
        comp_v: dom.v_ids().map(|v| cod.sq_h_id(f.v(v))).collect(),
        comp_v_inv: dom.v_ids().map(|v| cod.sq_h_id(f.v(v))).collect(),
    }
}

/// Composite `x` then `z` of horizontal pseudotransformations.
pub fn compose_hpseudo(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    x: &HPseudo,
    z: &HPseudo,
) -> HPseudo {
    debug_assert_eq!(x.target, z.source);
    let comp_obj: Vec<HId> = dom
        .obj_ids()
        .map(|a| cod.comp_h(x.comp_obj[a.0], z.comp_obj[a.0]))
        .collect();
    let comp_v: Vec<SqId> = dom
        .v_ids()
        .map(|f| cod.paste_h(x.comp_v[f.0], z.comp_v[f.0]))
        .collect();
    let mut comp_h = Vec::new();
    let mut comp_h_inv = Vec::new();
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        // Row 1: x^h pasted with the vertical identity square on z_C;
        // row 2: the vertical identity square on x_A pasted with z^h.
        let row1 = cod.paste_h(x.comp_h[h.0], cod.sq_v_id(z.comp_obj[c.0]));
        let row2 = cod.paste_h(cod.sq_v_id(x.comp_obj[a.0]), z.comp_h[h.0]);
        comp_h.push(cod.paste_v(row1, row2));
        let irow1 = cod.paste_h(cod.sq_v_id(x.comp_obj[a.0]), z.comp_h_inv[h.0]);
        let irow2 = cod.paste_h(x.comp_h_inv[h.0], cod.sq_v_id(z.comp_obj[c.0]));
        comp_h_inv.push(cod.paste_v(irow1, irow2));
    }
    HPseudo {
        source: x.source.clone(),
        target: z.target.clone(),
        comp_obj,
        comp_v,
        comp_h,
        comp_h_inv,
    }
}

/// Composite `y` then `w` of vertical pseudotransformations.
pub fn compose_vpseudo(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    y: &VPseudo,
    w: &VPseudo,
) -> VPseudo {
    debug_assert_eq!(y.target, w.source);
    let comp_obj: Vec<VId> = dom
        .obj_ids()
        .map(|a| cod.comp_v(y.comp_obj[a.0], w.comp_obj[a.0]))
        .collect();
    let comp_h: Vec<SqId> = dom
        .h_ids()
        .map(|h| cod.paste_v(y.comp_h[h.0], w.comp_h[h.0]))
        .collect();
    let mut comp_v = Vec::new();
    let mut comp_v_inv = Vec::new();
    for f in dom.v_ids() {
        let (a, b) = (dom.vcell(f).src, dom.vcell(f).tgt);
        // Column 1: the horizontal identity square on y_A above w^f;
        // column 2: y^f above the horizontal identity square on w_B.
        let col1 = cod.paste_v(cod.sq_h_id(y.comp_obj[a.0]), w.comp_v[f.0]);
        let col2 = cod.paste_v(y.comp_v[f.0], cod.sq_h_id(w.comp_obj[b.0]));
        comp_v.push(cod.paste_h(col1, col2));
        let icol1 = cod.paste_v(y.comp_v_inv[f.0], cod.sq_h_id(w.comp_obj[b.0]));
        let icol2 = cod.paste_v(cod.sq_h_id(y.comp_obj[a.0]), w.comp_v_inv[f.0]);
        comp_v_inv.push(cod.paste_h(icol1, icol2));
    }
    VPseudo {
        source: y.source.clone(),
        target: w.target.clone(),
        comp_obj,
        comp_h,
        comp_v,
        comp_v_inv,
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

macro_rules! fail {
    ($errs:expr, $law:expr, $($msg:tt)*) => {
        $errs.push(AxiomFailure { law: $law.to_string(), details: format!($($msg)*) })
    };
}

/// Check all horizontal pseudotransformation laws.
pub fn validate_hpseudo(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    x: &HPseudo,
) -> std::result::Result<(), Vec<AxiomFailure>> {
    let mut errs = Vec::new();
    if x.comp_obj.len() != dom.objects.len()
        || x.comp_v.len() != dom.vcells.len()
        || x.comp_h.len() != dom.hcells.len()
        || x.comp_h_inv.len() != dom.hcells.len()
    {
        fail!(errs, "structure", "component vectors do not match the domain");
        return Err(errs);
    }
    let (f, g) = (&x.source, &x.target);
    for a in dom.obj_ids() {
        let hc = cod.hcell(x.comp_obj[a.0]);
        if hc.src != f.obj(a) || hc.tgt != g.obj(a) {
            fail!(errs, "boundary", "object component at {} has wrong endpoints", dom.objects[a.0]);
        }
    }
    for fv in dom.v_ids() {
        let (a, b) = (dom.vcell(fv).src, dom.vcell(fv).tgt);
        let sq = cod.square(x.comp_v[fv.0]);
        if sq.top != x.comp_obj[a.0]
            || sq.bottom != x.comp_obj[b.0]
            || sq.left != f.v(fv)
            || sq.right != g.v(fv)
        {
            fail!(errs, "boundary", "vertical component at {} has wrong frame", dom.vcell(fv).name);
        }
    }
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        let sq = cod.square(x.comp_h[h.0]);
        let top = cod.try_h(f.h(h), x.comp_obj[c.0]);
        let bottom = cod.try_h(x.comp_obj[a.0], g.h(h));
        if Some(sq.top) != top
            || Some(sq.bottom) != bottom
            || sq.left != cod.v_id(f.obj(a))
            || sq.right != cod.v_id(g.obj(c))
        {
            fail!(errs, "boundary", "horizontal component at {} has wrong frame", dom.hcell(h).name);
            continue;
        }
        let inv = x.comp_h_inv[h.0];
        if cod.try_sq_v(x.comp_h[h.0], inv) != Some(cod.sq_v_id(sq.top))
            || cod.try_sq_v(inv, x.comp_h[h.0]) != Some(cod.sq_v_id(sq.bottom))
        {
            fail!(errs, "invertibility", "horizontal component at {} has a bad inverse", dom.hcell(h).name);
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }
    // (i) vertical functoriality
    for a in dom.obj_ids() {
        if x.comp_v[dom.v_id(a).0] != cod.sq_v_id(x.comp_obj[a.0]) {
            fail!(errs, "vertical-functoriality", "identity vertical at {}", dom.objects[a.0]);
        }
    }
    for (&(fv, gv), &c) in &dom.v_comp {
        if cod.paste_v(x.comp_v[fv.0], x.comp_v[gv.0]) != x.comp_v[c.0] {
            fail!(
                errs,
                "vertical-functoriality",
                "composite {};{}", dom.vcell(fv).name, dom.vcell(gv).name
                );
        }
    }
    // (ii) horizontal functoriality
    for a in dom.obj_ids() {
        if x.comp_h[dom.h_id(a).0] != cod.sq_v_id(x.comp_obj[a.0]) {
            fail!(errs, "horizontal-functoriality", "identity horizontal at {}", dom.objects[a.0]);
        }
    }
    for (&(h, k), &c) in &dom.h_comp {
        let a = dom.hcell(h).src;
        let e = dom.hcell(k).tgt;
        let row1 = cod.paste_h(cod.sq_v_id(f.h(h)), x.comp_h[k.0]);
        let row2 = cod.paste_h(x.comp_h[h.0], cod.sq_v_id(g.h(k)));
        let _ = (a, e);
        if cod.paste_v(row1, row2) != x.comp_h[c.0] {
            fail!(
                errs,
                "horizontal-functoriality",
                "composite {};{}", dom.hcell(h).name, dom.hcell(k).name
                );
        }
    }
    // (iii) naturality
    for s in dom.sq_ids() {
        let sq = dom.square(s);
        let lhs = cod.paste_v(
            cod.paste_h(f.sq(s), x.comp_v[sq.right.0]),
            x.comp_h[sq.bottom.0],
        );
        let rhs = cod.paste_v(
            x.comp_h[sq.top.0],
            cod.paste_h(x.comp_v[sq.left.0], g.sq(s)),
        );
        if lhs != rhs {
            fail!(errs, "naturality", "square {}", dom.square(s).name);
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

/// Check all vertical pseudotransformation laws.
pub fn validate_vpseudo(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    y: &VPseudo,
) -> std::result::Result<(), Vec<AxiomFailure>> {
    let mut errs = Vec::new();
    if y.comp_obj.len() != dom.objects.len()
        || y.comp_h.len() != dom.hcells.len()
        || y.comp_v.len() != dom.vcells.len()
        || y.comp_v_inv.len() != dom.vcells.len()
    {
        fail!(errs, "structure", "component vectors do not match the domain");
        return Err(errs);
    }
    let (f, h_) = (&y.source, &y.target);
    for a in dom.obj_ids() {
        let vc = cod.vcell(y.comp_obj[a.0]);
        if vc.src != f.obj(a) || vc.tgt != h_.obj(a) {
            fail!(errs, "boundary", "object component at {} has wrong endpoints", dom.objects[a.0]);
        }
    }
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        let sq = cod.square(y.comp_h[h.0]);
        if sq.top != f.h(h)
            || sq.bottom != h_.h(h)
            || sq.left != y.comp_obj[a.0]
            || sq.right != y.comp_obj[c.0]
        {
            fail!(errs, "boundary", "horizontal component at {} has wrong frame", dom.hcell(h).name);
        }
    }
    for fv in dom.v_ids() {
        let (a, b) = (dom.vcell(fv).src, dom.vcell(fv).tgt);
        let sq = cod.square(y.comp_v[fv.0]);
        let left = cod.try_v(y.comp_obj[a.0], h_.v(fv));
        let right = cod.try_v(f.v(fv), y.comp_obj[b.0]);
        if Some(sq.left) != left
            || Some(sq.right) != right
            || sq.top != cod.h_id(f.obj(a))
            || sq.bottom != cod.h_id(h_.obj(b))
        {
            fail!(errs, "boundary", "vertical component at {} has wrong frame", dom.vcell(fv).name);
            continue;
        }
        let inv = y.comp_v_inv[fv.0];
        if cod.try_sq_h(y.comp_v[fv.0], inv) != Some(cod.sq_h_id(sq.left))
            || cod.try_sq_h(inv, y.comp_v[fv.0]) != Some(cod.sq_h_id(sq.right))
        {
            fail!(errs, "invertibility", "vertical component at {} has a bad inverse", dom.vcell(fv).name);
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }
    // (i) horizontal functoriality
    for a in dom.obj_ids() {
        if y.comp_h[dom.h_id(a).0] != cod.sq_h_id(y.comp_obj[a.0]) {
            fail!(errs, "horizontal-functoriality", "identity horizontal at {}", dom.objects[a.0]);
        }
    }
    for (&(h, k), &c) in &dom.h_comp {
        if cod.paste_h(y.comp_h[h.0], y.comp_h[k.0]) != y.comp_h[c.0] {
            fail!(
                errs,
                "horizontal-functoriality",
                "composite {};{}", dom.hcell(h).name, dom.hcell(k).name
                );
        }
    }
    // (ii) vertical functoriality
    for a in dom.obj_ids() {
        if y.comp_v[dom.v_id(a).0] != cod.sq_h_id(y.comp_obj[a.0]) {
            fail!(errs, "vertical-functoriality", "identity vertical at {}", dom.objects[a.0]);
        }
    }
    for (&(fv, gv), &c) in &dom.v_comp {
        let col1 = cod.paste_v(y.comp_v[fv.0], cod.sq_h_id(h_.v(gv)));
        let col2 = cod.paste_v(cod.sq_h_id(f.v(fv)), y.comp_v[gv.0]);
        if cod.paste_h(col1, col2) != y.comp_v[c.0] {
            fail!(
                errs,
                "vertical-functoriality",
                "composite {};{}", dom.vcell(fv).name, dom.vcell(gv).name
                );
        }
    }
    // (iii) naturality
    for s in dom.sq_ids() {
        let sq = dom.square(s);
        let lhs = cod.paste_h(
            y.comp_v[sq.left.0],
            cod.paste_v(f.sq(s), y.comp_h[sq.bottom.0]),
        );
        let rhs = cod.paste_h(
            cod.paste_v(y.comp_h[sq.top.0], h_.sq(s)),
            y.comp_v[sq.right.0],
        );
        if lhs != rhs {
            fail!(errs, "naturality", "square {}", dom.square(s).name);
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

/// Check the two modification axioms plus all frame conditions.
pub fn validate_modification(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    m: &Modification,
) -> std::result::Result<(), Vec<AxiomFailure>> {
    let mut errs = Vec::new();
    if m.comp.len() != dom.objects.len() {
        fail!(errs, "structure", "component vector does not match the domain");
        return Err(errs);
    }
    if m.top.source != m.left.source
        || m.top.target != m.right.source
        || m.bottom.source != m.left.target
        || m.bottom.target != m.right.target
    {
        fail!(errs, "boundary", "pseudotransformation frame does not close");
        return Err(errs);
    }
    for a in dom.obj_ids() {
        let sq = cod.square(m.comp[a.0]);
        if sq.top != m.top.comp_obj[a.0]
            || sq.bottom != m.bottom.comp_obj[a.0]
            || sq.left != m.left.comp_obj[a.0]
            || sq.right != m.right.comp_obj[a.0]
        {
            fail!(errs, "boundary", "component at {} has wrong frame", dom.objects[a.0]);
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }
    let (x, z, y, v) = (&m.top, &m.bottom, &m.left, &m.right);
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        let lhs = cod.paste_v(
            cod.paste_h(y.comp_h[h.0], m.comp[c.0]),
            z.comp_h[h.0],
        );
        let rhs = cod.paste_v(
            x.comp_h[h.0],
            cod.paste_h(m.comp[a.0], v.comp_h[h.0]),
        );
        if lhs != rhs {
            fail!(errs, "modification-h", "horizontal 1-cell {}", dom.hcell(h).name);
        }
    }
    for fv in dom.v_ids() {
        let (a, b) = (dom.vcell(fv).src, dom.vcell(fv).tgt);
        let lhs = cod.paste_h(
            cod.paste_v(m.comp[a.0], z.comp_v[fv.0]),
            v.comp_v[fv.0],
        );
        let rhs = cod.paste_h(
            y.comp_v[fv.0],
            cod.paste_v(x.comp_v[fv.0], m.comp[b.0]),
        );
        if lhs != rhs {
            fail!(errs, "modification-v", "vertical 1-cell {}", dom.vcell(fv).name);
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Enumerate all horizontal pseudotransformations `f → g`, in deterministic
/// lexicographic order of their component vectors.
pub fn enumerate_hpseudos(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    budget: &Budget,
) -> Result<Vec<HPseudo>> {
    // Candidate object components, per object.
    let mut obj_cands: Vec<Vec<HId>> = Vec::new();
    for a in dom.obj_ids() {
        obj_cands.push(
            cod.h_ids()
                .filter(|&h| cod.hcell(h).src == f.obj(a) && cod.hcell(h).tgt == g.obj(a))
                .collect(),
        );
    }
    let mut out = Vec::new();
    let mut chosen: Vec<HId> = Vec::new();
    enumerate_hpseudos_obj(dom, cod, f, g, &obj_cands, &mut chosen, &mut out, budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_hpseudos_obj(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    obj_cands: &[Vec<HId>],
    chosen: &mut Vec<HId>,
    out: &mut Vec<HPseudo>,
    budget: &Budget,
) -> Result<()> {
    if chosen.len() == obj_cands.len() {
        return enumerate_hpseudos_cells(dom, cod, f, g, chosen, out, budget);
    }
    for &cand in &obj_cands[chosen.len()] {
        budget.charge(1, "pseudotransformation enumeration")?;
        chosen.push(cand);
        enumerate_hpseudos_obj(dom, cod, f, g, obj_cands, chosen, out, budget)?;
        chosen.pop();
    }
    Ok(())
}

fn enumerate_hpseudos_cells(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    comp_obj: &[HId],
    out: &mut Vec<HPseudo>,
    budget: &Budget,
) -> Result<()> {
    // Candidates for each vertical component; identity verticals are forced.
    let mut v_cands: Vec<Vec<SqId>> = Vec::new();
    for fv in dom.v_ids() {
        let (a, b) = (dom.vcell(fv).src, dom.vcell(fv).tgt);
        if dom.v_id(a) == fv {
            v_cands.push(vec![cod.sq_v_id(comp_obj[a.0])]);
        } else {
            v_cands.push(cod.squares_with_frame(
                comp_obj[a.0],
                f.v(fv),
                comp_obj[b.0],
                g.v(fv),
            ));
        }
    }
    // Candidates for each horizontal component (must be vertically
    // invertible); identity horizontals are forced.
    let mut h_cands: Vec<Vec<(SqId, SqId)>> = Vec::new();
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        if dom.h_id(a) == h {
            let s = cod.sq_v_id(comp_obj[a.0]);
            h_cands.push(vec![(s, s)]);
            continue;
        }
        let top = match cod.try_h(f.h(h), comp_obj[c.0]) {
            Some(t) => t,
            None => return Ok(()),
        };
        let bottom = match cod.try_h(comp_obj[a.0], g.h(h)) {
            Some(b) => b,
            None => return Ok(()),
        };
        let cands: Vec<(SqId, SqId)> = cod
            .squares_with_frame(top, cod.v_id(f.obj(a)), bottom, cod.v_id(g.obj(c)))
            .into_iter()
            .filter_map(|s| cod.vertical_inverse(s).map(|inv| (s, inv)))
            .collect();
        h_cands.push(cands);
    }
    let mut v_choice = vec![0usize; v_cands.len()];
    let mut h_choice = vec![0usize; h_cands.len()];
    if v_cands.iter().any(|c| c.is_empty()) || h_cands.iter().any(|c| c.is_empty()) {
        return Ok(());
    }
    // Cartesian product over component choices, validated per candidate. The
    // component spaces are tiny (squares with one fixed frame each), so plain
    // product-plus-filter is both simple and fast enough.
    loop {
        budget.charge(1, "pseudotransformation enumeration")?;
        let cand = HPseudo {
            source: f.clone(),
            target: g.clone(),
            comp_obj: comp_obj.to_vec(),
            comp_v: v_choice.iter().enumerate().map(|(i, &j)| v_cands[i][j]).collect(),
            comp_h: h_choice.iter().enumerate().map(|(i, &j)| h_cands[i][j].0).collect(),
            comp_h_inv: h_choice.iter().enumerate().map(|(i, &j)| h_cands[i][j].1).collect(),
        };
        if validate_hpseudo(dom, cod, &cand).is_ok() {
            out.push(cand);
        }
        // Advance the mixed-radix counter (h components vary fastest).
        let mut advanced = false;
        for i in (0..h_choice.len()).rev() {
            if h_choice[i] + 1 < h_cands[i].len() {
                h_choice[i] += 1;
                for c in h_choice.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        for c in h_choice.iter_mut() {
            *c = 0;
        }
        for i in (0..v_choice.len()).rev() {
            if v_choice[i] + 1 < v_cands[i].len() {
                v_choice[i] += 1;
                for c in v_choice.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(());
        }
    }
}

/// Enumerate all vertical pseudotransformations `f → g`.
pub fn enumerate_vpseudos(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    budget: &Budget,
) -> Result<Vec<VPseudo>> {
    // Reuse the horizontal enumeration through transposition of the codomain
    // would obscure the component bookkeeping; enumerate directly instead.
    let mut obj_cands: Vec<Vec<VId>> = Vec::new();
    for a in dom.obj_ids() {
        obj_cands.push(
            cod.v_ids()
                .filter(|&v| cod.vcell(v).src == f.obj(a) && cod.vcell(v).tgt == g.obj(a))
                .collect(),
        );
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = vec![0; obj_cands.len()];
    if obj_cands.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        budget.charge(1, "pseudotransformation enumeration")?;
        let comp_obj: Vec<VId> = stack.iter().enumerate().map(|(i, &j)| obj_cands[i][j]).collect();
        enumerate_vpseudos_cells(dom, cod, f, g, &comp_obj, &mut out, budget)?;
        let mut advanced = false;
        for i in (0..stack.len()).rev() {
            if stack[i] + 1 < obj_cands[i].len() {
                stack[i] += 1;
                for c in stack.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(out);
        }
    }
}

fn enumerate_vpseudos_cells(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    comp_obj: &[VId],
    out: &mut Vec<VPseudo>,
    budget: &Budget,
) -> Result<()> {
    let mut h_cands: Vec<Vec<SqId>> = Vec::new();
    for h in dom.h_ids() {
        let (a, c) = (dom.hcell(h).src, dom.hcell(h).tgt);
        if dom.h_id(a) == h {
            h_cands.push(vec![cod.sq_h_id(comp_obj[a.0])]);
        } else {
            h_cands.push(cod.squares_with_frame(
                f.h(h),
                comp_obj[a.0],
                g.h(h),
                comp_obj[c.0],
            ));
        }
    }
    let mut v_cands: Vec<Vec<(SqId, SqId)>> = Vec::new();
    for fv in dom.v_ids() {
        let (a, b) = (dom.vcell(fv).src, dom.vcell(fv).tgt);
        if dom.v_id(a) == fv {
            let s = cod.sq_h_id(comp_obj[a.0]);
            v_cands.push(vec![(s, s)]);
            continue;
        }
        let left = match cod.try_v(comp_obj[a.0], g.v(fv)) {
            Some(l) => l,
            None => return Ok(()),
        };
        let right = match cod.try_v(f.v(fv), comp_obj[b.0]) {
            Some(r) => r,
            None => return Ok(()),
        };
        let cands: Vec<(SqId, SqId)> = cod
            .squares_with_frame(cod.h_id(f.obj(a)), left, cod.h_id(g.obj(b)), right)
            .into_iter()
            .filter_map(|s| cod.horizontal_inverse(s).map(|inv| (s, inv)))
            .collect();
        v_cands.push(cands);
    }
    if h_cands.iter().any(|c| c.is_empty()) || v_cands.iter().any(|c| c.is_empty()) {
        return Ok(());
    }
    let mut h_choice = vec![0usize; h_cands.len()];
    let mut v_choice = vec![0usize; v_cands.len()];
    loop {
        budget.charge(1, "pseudotransformation enumeration")?;
        let cand = VPseudo {
            source: f.clone(),
            target: g.clone(),
            comp_obj: comp_obj.to_vec(),
            comp_h: h_choice.iter().enumerate().map(|(i, &j)| h_cands[i][j]).collect(),
            comp_v: v_choice.iter().enumerate().map(|(i, &j)| v_cands[i][j].0).collect(),
            comp_v_inv: v_choice.iter().enumerate().map(|(i, &j)| v_cands[i][j].1).collect(),
        };
        if validate_vpseudo(dom, cod, &cand).is_ok() {
            out.push(cand);
        }
        let mut advanced = false;
        for i in (0..v_choice.len()).rev() {
            if v_choice[i] + 1 < v_cands[i].len() {
                v_choice[i] += 1;
                for c in v_choice.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        for c in v_choice.iter_mut() {
            *c = 0;
        }
        for i in (0..h_choice.len()).rev() {
            if h_choice[i] + 1 < h_cands[i].len() {
                h_choice[i] += 1;
                for c in h_choice.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(());
        }
    }
}

/// Enumerate all modifications filling the given frame.
pub fn enumerate_modifications(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    top: &HPseudo,
    left: &VPseudo,
    bottom: &HPseudo,
    right: &VPseudo,
    budget: &Budget,
) -> Result<Vec<Modification>> {
    let mut cands: Vec<Vec<SqId>> = Vec::new();
    for a in dom.obj_ids() {
        cands.push(cod.squares_with_frame(
            top.comp_obj[a.0],
            left.comp_obj[a.0],
            bottom.comp_obj[a.0],
            right.comp_obj[a.0],
        ));
    }
    let mut out = Vec::new();
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut choice = vec![0usize; cands.len()];
    loop {
        budget.charge(1, "modification enumeration")?;
        let m = Modification {
            top: top.clone(),
            left: left.clone(),
            bottom: bottom.clone(),
            right: right.clone(),
            comp: choice.iter().enumerate().map(|(i, &j)| cands[i][j]).collect(),
        };
        if validate_modification(dom, cod, &m).is_ok() {
            out.push(m);
        }
        let mut advanced = false;
        for i in (0..choice.len()).rev() {
            if choice[i] + 1 < cands[i].len() {
                choice[i] += 1;
                for c in choice.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(out);
        }
    }
}

// ---------------------------------------------------------------------------
// The hom double category
// ---------------------------------------------------------------------------

/// A hom double category together with the cell dictionaries used to locate
/// functors, pseudotransformations and modifications by value.
#[derive(Debug, Clone)]
pub struct HomDouble {
    pub cat: FiniteDoubleCategory,
    pub functors: Vec<DoubleFunctor>,
    pub hpseudos: Vec<HPseudo>,
    pub vpseudos: Vec<VPseudo>,
    pub mods: Vec<Modification>,
}

impl HomDouble {
    pub fn find_functor(&self, f: &DoubleFunctor) -> Result<ObjId> {
        self.functors
            .iter()
            .position(|g| g == f)
            .map(ObjId)
            .ok_or_else(|| Error::NotFound("functor not an object of this hom category".into()))
    }
    pub fn find_hpseudo(&self, x: &HPseudo) -> Result<HId> {
        self.hpseudos
            .iter()
            .position(|z| z == x)
            .map(HId)
            .ok_or_else(|| Error::NotFound("horizontal pseudotransformation not a cell of this hom category".into()))
    }
    pub fn find_vpseudo(&self, y: &VPseudo) -> Result<VId> {
        self.vpseudos
            .iter()
            .position(|z| z == y)
            .map(VId)
            .ok_or_else(|| Error::NotFound("vertical pseudotransformation not a cell of this hom category".into()))
    }
    pub fn find_mod(&self, m: &Modification) -> Result<SqId> {
        self.mods
            .iter()
            .position(|z| z == m)
            .map(SqId)
            .ok_or_else(|| Error::NotFound("modification not a cell of this hom category".into()))
    }
}

/// Build the hom double category `hom(dom, cod)`.
pub fn build_hom(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<HomDouble> {
    let functors = enumerate_functors(dom, cod, budget)?;

    let mut hpseudos: Vec<HPseudo> = Vec::new();
    for f in &functors {
        for g in &functors {
            hpseudos.extend(enumerate_hpseudos(dom, cod, f, g, budget)?);
        }
    }
    let mut vpseudos: Vec<VPseudo> = Vec::new();
    for f in &functors {
        for g in &functors {
            vpseudos.extend(enumerate_vpseudos(dom, cod, f, g, budget)?);
        }
    }
    let mut mods: Vec<Modification> = Vec::new();
    for top in &hpseudos {
        for bottom in &hpseudos {
            for left in vpseudos.iter().filter(|y| {
                y.source == top.source && y.target == bottom.source
            }) {
                for right in vpseudos.iter().filter(|v| {
                    v.source == top.target && v.target == bottom.target
                }) {
                    mods.extend(enumerate_modifications(
                        dom, cod, top, left, bottom, right, budget,
                    )?);
                }
            }
        }
    }

    let fidx = |f: &DoubleFunctor| ObjId(functors.iter().position(|g| g == f).unwrap());
    let hidx = |x: &HPseudo| -> Result<HId> {
        hpseudos
            .iter()
            .position(|z| z == x)
            .map(HId)
            .ok_or_else(|| Error::structure("hom category not closed under horizontal composition"))
    };
    let vidx = |y: &VPseudo| -> Result<VId> {
        vpseudos
            .iter()
            .position(|z| z == y)
            .map(VId)
            .ok_or_else(|| Error::structure("hom category not closed under vertical composition"))
    };
    let sidx = |m: &Modification| -> Result<SqId> {
        mods.iter()
            .position(|z| z == m)
            .map(SqId)
            .ok_or_else(|| Error::structure("hom category not closed under square composition"))
    };

    let objects: Vec<String> = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let hcells: Vec<HCell> = hpseudos
        .iter()
        .enumerate()
        .map(|(i, x)| HCell {
            name: format!("x{i}"),
            src: fidx(&x.source),
            tgt: fidx(&x.target),
        })
        .collect();
    let vcells: Vec<VCell> = vpseudos
        .iter()
        .enumerate()
        .map(|(i, y)| VCell {
            name: format!("y{i}"),
            src: fidx(&y.source),
            tgt: fidx(&y.target),
        })
        .collect();
    let mut squares = Vec::new();
    for (i, m) in mods.iter().enumerate() {
        squares.push(Square {
            name: format!("m{i}"),
            top: hidx(&m.top)?,
            left: vidx(&m.left)?,
            bottom: hidx(&m.bottom)?,
            right: vidx(&m.right)?,
        });
    }

    let mut h_id = Vec::new();
    let mut v_id = Vec::new();
    for f in &functors {
        h_id.push(hidx(&identity_hpseudo(dom, cod, f))?);
        v_id.push(vidx(&identity_vpseudo(dom, cod, f))?);
    }
    let mut sq_v_id = Vec::new();
    for x in &hpseudos {
        let idl = identity_vpseudo(dom, cod, &x.source);
        let idr = identity_vpseudo(dom, cod, &x.target);
        sq_v_id.push(sidx(&Modification {
            top: x.clone(),
            left: idl,
            bottom: x.clone(),
            right: idr,
            comp: dom.obj_ids().map(|a| cod.sq_v_id(x.comp_obj[a.0])).collect(),
        })?);
    }
    let mut sq_h_id = Vec::new();
    for y in &vpseudos {
        let idt = identity_hpseudo(dom, cod, &y.source);
        let idb = identity_hpseudo(dom, cod, &y.target);
        sq_h_id.push(sidx(&Modification {
            top: idt,
            left: y.clone(),
            bottom: idb,
            right: y.clone(),
            comp: dom.obj_ids().map(|a| cod.sq_h_id(y.comp_obj[a.0])).collect(),
        })?);
    }

    let mut h_comp = std::collections::BTreeMap::new();
    for (i, x) in hpseudos.iter().enumerate() {
        for (j, z) in hpseudos.iter().enumerate() {
            if x.target == z.source {
                budget.charge(1, "hom composition tables")?;
                h_comp.insert(
                    (HId(i), HId(j)),
                    hidx(&compose_hpseudo(dom, cod, x, z))?,
                );
            }
        }
    }
    let mut v_comp = std::collections::BTreeMap::new();
    for (i, y) in vpseudos.iter().enumerate() {
        for (j, w) in vpseudos.iter().enumerate() {
            if y.target == w.source {
                budget.charge(1, "hom composition tables")?;
                v_comp.insert(
                    (VId(i), VId(j)),
                    vidx(&compose_vpseudo(dom, cod, y, w))?,
                );
            }
        }
    }
    let mut sq_h_comp = std::collections::BTreeMap::new();
    let mut sq_v_comp = std::collections::BTreeMap::new();
    for (i, m) in mods.iter().enumerate() {
        for (j, n) in mods.iter().enumerate() {
            if m.right == n.left {
                budget.charge(1, "hom composition tables")?;
                let comp = Modification {
                    top: compose_hpseudo(dom, cod, &m.top, &n.top),
                    left: m.left.clone(),
                    bottom: compose_hpseudo(dom, cod, &m.bottom, &n.bottom),
                    right: n.right.clone(),
                    comp: dom
                        .obj_ids()
                        .map(|a| cod.paste_h(m.comp[a.0], n.comp[a.0]))
                        .collect(),
                };
                sq_h_comp.insert((SqId(i), SqId(j)), sidx(&comp)?);
            }
            if m.bottom == n.top {
                budget.charge(1, "hom composition tables")?;
                let comp = Modification {
                    top: m.top.clone(),
                    left: compose_vpseudo(dom, cod, &m.left, &n.left),
                    bottom: n.bottom.clone(),
                    right: compose_vpseudo(dom, cod, &m.right, &n.right),
                    comp: dom
                        .obj_ids()
                        .map(|a| cod.paste_v(m.comp[a.0], n.comp[a.0]))
                        .collect(),
                };
                sq_v_comp.insert((SqId(i), SqId(j)), sidx(&comp)?);
            }
        }
    }

    let cat = FiniteDoubleCategory {
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
    Ok(HomDouble {
        cat,
        functors,
        hpseudos,
        vpseudos,
        mods,
    })
}

/// Build the strict hom double category: the sub-double-category of
/// `hom(dom, cod)` on all objects, the horizontal pseudotransformations whose
/// `comp_h` components are all identity squares, the vertical ones whose
/// `comp_v` components are all identity squares, and the modifications framed
/// by such. Returns the strict hom together with the inclusion functor into
/// the full hom.
pub fn build_strict_hom(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<(HomDouble, DoubleFunctor, HomDouble)> {
    let full = build_hom(dom, cod, budget)?;
    let (strict, inclusion) = strict_sub(dom, cod, &full)?;
    Ok((strict, inclusion, full))
}

/// Carve the strict sub-double-category out of an already-built hom.
pub fn strict_sub(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    full: &HomDouble,
) -> Result<(HomDouble, DoubleFunctor)> {
    let h_strict = |x: &HPseudo| {
        dom.h_ids().all(|h| {
            let top = cod.square(x.comp_h[h.0]).top;
            x.comp_h[h.0] == cod.sq_v_id(top) && x.comp_h_inv[h.0] == cod.sq_v_id(top)
        })
    };
    let v_strict = |y: &VPseudo| {
        dom.v_ids().all(|f| {
            let left = cod.square(y.comp_v[f.0]).left;
            y.comp_v[f.0] == cod.sq_h_id(left) && y.comp_v_inv[f.0] == cod.sq_h_id(left)
        })
    };
    let keep_h: Vec<usize> = (0..full.hpseudos.len())
        .filter(|&i| h_strict(&full.hpseudos[i]))
        .collect();
    let keep_v: Vec<usize> = (0..full.vpseudos.len())
        .filter(|&i| v_strict(&full.vpseudos[i]))
        .collect();
    let keep_s: Vec<usize> = (0..full.mods.len())
        .filter(|&i| {
            let m = &full.mods[i];
            h_strict(&m.top) && h_strict(&m.bottom) && v_strict(&m.left) && v_strict(&m.right)
        })
        .collect();
    let h_new: std::collections::BTreeMap<usize, usize> =
        keep_h.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let v_new: std::collections::BTreeMap<usize, usize> =
        keep_v.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let s_new: std::collections::BTreeMap<usize, usize> =
        keep_s.iter().enumerate().map(|(n, &o)| (o, n)).collect();

    let sub = |msg: &str| Error::structure(format!("strict hom not closed: {msg}"));
    let cat = &full.cat;
    let strict_cat = FiniteDoubleCategory {
        objects: cat.objects.clone(),
        hcells: keep_h
            .iter()
            .map(|&i| cat.hcells[i].clone())
            .collect(),
        vcells: keep_v.iter().map(|&i| cat.vcells[i].clone()).collect(),
        squares: keep_s
            .iter()
            .map(|&i| {
                let s = &cat.squares[i];
                Ok(Square {
                    name: s.name.clone(),
                    top: HId(*h_new.get(&s.top.0).ok_or_else(|| sub("square top"))?),
                    left: VId(*v_new.get(&s.left.0).ok_or_else(|| sub("square left"))?),
                    bottom: HId(*h_new.get(&s.bottom.0).ok_or_else(|| sub("square bottom"))?),
                    right: VId(*v_new.get(&s.right.0).ok_or_else(|| sub("square right"))?),
                })
            })
            .collect::<Result<Vec<_>>>()?,
        h_id: cat
            .h_id
            .iter()
            .map(|h| Ok(HId(*h_new.get(&h.0).ok_or_else(|| sub("identity hcell"))?)))
            .collect::<Result<Vec<_>>>()?,
        v_id: cat
            .v_id
            .iter()
            .map(|v| Ok(VId(*v_new.get(&v.0).ok_or_else(|| sub("identity vcell"))?)))
            .collect::<Result<Vec<_>>>()?,
        sq_v_id: keep_h
            .iter()
            .map(|&i| {
                Ok(SqId(*s_new
                    .get(&cat.sq_v_id[i].0)
                    .ok_or_else(|| sub("identity square"))?))
            })
            .collect::<Result<Vec<_>>>()?,
        sq_h_id: keep_v
            .iter()
            .map(|&i| {
                Ok(SqId(*s_new
                    .get(&cat.sq_h_id[i].0)
                    .ok_or_else(|| sub("identity square"))?))
            })
            .collect::<Result<Vec<_>>>()?,
        h_comp: cat
            .h_comp
            .iter()
            .filter(|((f, g), _)| h_new.contains_key(&f.0) && h_new.contains_key(&g.0))
            .map(|(&(f, g), &c)| {
                Ok((
                    (HId(h_new[&f.0]), HId(h_new[&g.0])),
                    HId(*h_new.get(&c.0).ok_or_else(|| sub("hcell composite"))?),
                ))
            })
            .collect::<Result<_>>()?,
        v_comp: cat
            .v_comp
            .iter()
            .filter(|((f, g), _)| v_new.contains_key(&f.0) && v_new.contains_key(&g.0))
            .map(|(&(f, g), &c)| {
                Ok((
                    (VId(v_new[&f.0]), VId(v_new[&g.0])),
                    VId(*v_new.get(&c.0).ok_or_else(|| sub("vcell composite"))?),
                ))
            })
            .collect::<Result<_>>()?,
        sq_h_comp: cat
            .sq_h_comp
            .iter()
            .filter(|((s, t), _)| s_new.contains_key(&s.0) && s_new.contains_key(&t.0))
            .map(|(&(s, t), &c)| {
                Ok((
                    (SqId(s_new[&s.0]), SqId(s_new[&t.0])),
                    SqId(*s_new.get(&c.0).ok_or_else(|| sub("square composite"))?),
                ))
            })
            .collect::<Result<_>>()?,
        sq_v_comp: cat
            .sq_v_comp
            .iter()
            .filter(|((s, t), _)| s_new.contains_key(&s.0) && s_new.contains_key(&t.0))
            .map(|(&(s, t), &c)| {
                Ok((
                    (SqId(s_new[&s.0]), SqId(s_new[&t.0])),
                    SqId(*s_new.get(&c.0).ok_or_else(|| sub("square composite"))?),
                ))
            })
            .collect::<Result<_>>()?,
    };
    let inclusion = DoubleFunctor {
        obj: cat.obj_ids().collect(),
        h: keep_h.iter().map(|&i| HId(i)).collect(),
        v: keep_v.iter().map(|&i| VId(i)).collect(),
        sq: keep_s.iter().map(|&i| SqId(i)).collect(),
    };
    let strict = HomDouble {
        cat: strict_cat,
        functors: full.functors.clone(),
        hpseudos: keep_h.iter().map(|&i| full.hpseudos[i].clone()).collect(),
        vpseudos: keep_v.iter().map(|&i| full.vpseudos[i].clone()).collect(),
        mods: keep_s.iter().map(|&i| full.mods[i].clone()).collect(),
    };
    Ok((strict, inclusion))
}

// ---------------------------------------------------------------------------
// Functoriality of hom in both arguments
// ---------------------------------------------------------------------------

/// Whisker a horizontal pseudotransformation by a functor `p: A' → A` on the
/// domain side: components are reindexed along `p`.
pub fn hpseudo_precompose(x: &HPseudo, p: &DoubleFunctor, new_dom: &FiniteDoubleCategory) -> HPseudo {
    HPseudo {
        source: x.source.after(p),
        target: x.target.after(p),
        comp_obj: new_dom.obj_ids().map(|a| x.comp_obj[p.obj(a).0]).collect(),
        comp_v: new_dom.v_ids().map(|f| x.comp_v[p.v(f).0]).collect(),
        comp_h: new_dom.h_ids().map(|h| x.comp_h[p.h(h).0]).collect(),
        comp_h_inv: new_dom.h_ids().map(|h| x.comp_h_inv[p.h(h).0]).collect(),
    }
}

/// Push a horizontal pseudotransformation forward along a functor
/// `q: B → B'` on the codomain side.
pub fn hpseudo_postcompose(x: &HPseudo, q: &DoubleFunctor) -> HPseudo {
    HPseudo {
        source: q.after(&x.source),
        target: q.after(&x.target),
        comp_obj: x.comp_obj.iter().map(|&h| q.h(h)).collect(),
        comp_v: x.comp_v.iter().map(|&s| q.sq(s)).collect(),
        comp_h: x.comp_h.iter().map(|&s| q.sq(s)).collect(),
        comp_h_inv: x.comp_h_inv.iter().map(|&s| q.sq(s)).collect(),
    }
}

pub fn vpseudo_precompose(y: &VPseudo, p: &DoubleFunctor, new_dom: &FiniteDoubleCategory) -> VPseudo {
    VPseudo {
        source: y.source.after(p),
        target: y.target.after(p),
        comp_obj: new_dom.obj_ids().map(|a| y.comp_obj[p.obj(a).0]).collect(),
        comp_h: new_dom.h_ids().map(|h| y.comp_h[p.h(h).0]).collect(),
        comp_v: new_dom.v_ids().map(|f| y.comp_v[p.v(f).0]).collect(),
        comp_v_inv: new_dom.v_ids().map(|f| y.comp_v_inv[p.v(f).0]).collect(),
    }
}

pub fn vpseudo_postcompose(y: &VPseudo, q: &DoubleFunctor) -> VPseudo {
    VPseudo {
        source: q.after(&y.source),
        target: q.after(&y.target),
        comp_obj: y.comp_obj.iter().map(|&v| q.v(v)).collect(),
        comp_h: y.comp_h.iter().map(|&s| q.sq(s)).collect(),
        comp_v: y.comp_v.iter().map(|&s| q.sq(s)).collect(),
        comp_v_inv: y.comp_v_inv.iter().map(|&s| q.sq(s)).collect(),
    }
}

pub fn modification_precompose(
    m: &Modification,
    p: &DoubleFunctor,
    new_dom: &FiniteDoubleCategory,
) -> Modification {
    Modification {
        top: hpseudo_precompose(&m.top, p, new_dom),
        left: vpseudo_precompose(&m.left, p, new_dom),
        bottom: hpseudo_precompose(&m.bottom, p, new_dom),
        right: vpseudo_precompose(&m.right, p, new_dom),
        comp: new_dom.obj_ids().map(|a| m.comp[p.obj(a).0]).collect(),
    }
}

pub fn modification_postcompose(m: &Modification, q: &DoubleFunctor) -> Modification {
    Modification {
        top: hpseudo_postcompose(&m.top, q),
        left: vpseudo_postcompose(&m.left, q),
        bottom: hpseudo_postcompose(&m.bottom, q),
        right: vpseudo_postcompose(&m.right, q),
        comp: m.comp.iter().map(|&s| q.sq(s)).collect(),
    }
}

/// The double functor `hom(A, B) → hom(A', B')` induced by `p: A' → A` and
/// `q: B → B'` (contravariant in the first argument): a functor `G` is sent
/// to `q ∘ G ∘ p`, and transformations/modifications are whiskered on both
/// sides.
///
/// `hom_ab` must be `hom(A, B)` and `hom_ab2` must be `hom(A', B')`; `a2` is
/// the domain `A'` of `p`.
pub fn hom_map(
    p: &DoubleFunctor,
    q: &DoubleFunctor,
    a2: &FiniteDoubleCategory,
    hom_ab: &HomDouble,
    hom_ab2: &HomDouble,
) -> Result<DoubleFunctor> {
    let mut obj = Vec::new();
    for g in &hom_ab.functors {
        obj.push(hom_ab2.find_functor(&q.after(&g.after(p)))?);
    }
    let mut h = Vec::new();
    for x in &hom_ab.hpseudos {
        h.push(hom_ab2.find_hpseudo(&hpseudo_postcompose(&hpseudo_precompose(x, p, a2), q))?);
    }
    let mut v = Vec::new();
    for y in &hom_ab.vpseudos {
        v.push(hom_ab2.find_vpseudo(&vpseudo_postcompose(&vpseudo_precompose(y, p, a2), q))?);
    }
    let mut sq = Vec::new();
    for m in &hom_ab.mods {
        sq.push(hom_ab2.find_mod(&modification_postcompose(&modification_precompose(m, p, a2), q))?);
    }
    Ok(DoubleFunctor { obj, h, v, sq })
}

// ---------------------------------------------------------------------------
// The canonical isomorphism hom(unit, A) ≅ A
// ---------------------------------------------------------------------------

/// The canonical functor `A → hom(unit, A)` (where `unit` is the terminal
/// double category): each cell of `A` becomes the evaluation of the
/// corresponding constant-shaped cell.
pub fn unit_intro(a: &FiniteDoubleCategory, hom_unit_a: &HomDouble) -> Result<DoubleFunctor> {
    let unit = crate::dbl::zoo::terminal();
    let mut obj = Vec::new();
    for x in a.obj_ids() {
        obj.push(hom_unit_a.find_functor(&DoubleFunctor {
            obj: vec![x],
            h: vec![a.h_id(x)],
            v: vec![a.v_id(x)],
            sq: vec![a.sq_v_id(a.h_id(x))],
        })?);
    }
    let mut h = Vec::new();
    for f in a.h_ids() {
        let (s, t) = (a.hcell(f).src, a.hcell(f).tgt);
        let pick = |x: ObjId| DoubleFunctor {
            obj: vec![x],
            h: vec![a.h_id(x)],
            v: vec![a.v_id(x)],
            sq: vec![a.sq_v_id(a.h_id(x))],
        };
        h.push(hom_unit_a.find_hpseudo(&HPseudo {
            source: pick(s),
            target: pick(t),
            comp_obj: vec![f],
            comp_v: vec![a.sq_v_id(f)],
            comp_h: vec![a.sq_v_id(f)],
            comp_h_inv: vec![a.sq_v_id(f)],
        })?);
    }
    let mut v = Vec::new();
    for f in a.v_ids() {
        let (s, t) = (a.vcell(f).src, a.vcell(f).tgt);
        let pick = |x: ObjId| DoubleFunctor {
            obj: vec![x],
            h: vec![a.h_id(x)],
            v: vec![a.v_id(x)],
            sq: vec![a.sq_v_id(a.h_id(x))],
        };
        v.push(hom_unit_a.find_vpseudo(&VPseudo {
            source: pick(s),
            target: pick(t),
            comp_obj: vec![f],
            comp_h: vec![a.sq_h_id(f)],
            comp_v: vec![a.sq_h_id(f)],
            comp_v_inv: vec![a.sq_h_id(f)],
        })?);
    }
    let mut sq = Vec::new();
    for s in a.sq_ids() {
        let sqd = a.square(s);
        let top = hom_unit_a.hpseudos[h[sqd.top.0].0].clone();
        let bottom = hom_unit_a.hpseudos[h[sqd.bottom.0].0].clone();
        let left = hom_unit_a.vpseudos[v[sqd.left.0].0].clone();
        let right = hom_unit_a.vpseudos[v[sqd.right.0].0].clone();
        sq.push(hom_unit_a.find_mod(&Modification {
            top,
            left,
            bottom,
            right,
            comp: vec![s],
        })?);
    }
    let f = DoubleFunctor { obj, h, v, sq };
    let _ = unit;
    Ok(f)
}

/// The canonical functor `hom(unit, A) → A`, inverse to [`unit_intro`].
pub fn unit_elim(a: &FiniteDoubleCategory, hom_unit_a: &HomDouble) -> Result<DoubleFunctor> {
    let _ = a;
    Ok(DoubleFunctor {
        obj: hom_unit_a.functors.iter().map(|f| f.obj[0]).collect(),
        h: hom_unit_a.hpseudos.iter().map(|x| x.comp_obj[0]).collect(),
        v: hom_unit_a.vpseudos.iter().map(|y| y.comp_obj[0]).collect(),
        sq: hom_unit_a.mods.iter().map(|m| m.comp[0]).collect(),
    })
}

/// The functor `unit → hom(A, A)`-style point of a hom category: picks an
/// object (a functor) and its identity cells.
pub fn point_functor(hom: &HomDouble, f: &DoubleFunctor) -> Result<DoubleFunctor> {
    let i = hom.find_functor(f)?;
    Ok(DoubleFunctor {
        obj: vec![i],
        h: vec![hom.cat.h_id(i)],
        v: vec![hom.cat.v_id(i)],
        sq: vec![hom.cat.sq_v_id(hom.cat.h_id(i))],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;

    fn counts(h: &HomDouble) -> (usize, usize, usize, usize) {
        (
            h.cat.objects.len(),
            h.cat.hcells.len(),
            h.cat.vcells.len(),
            h.cat.squares.len(),
        )
    }

    #[test]
    fn hom_from_unit_is_isomorphic_to_codomain() {
        let unit = zoo::terminal();
        let budget = Budget::default();
        for a in [zoo::terminal(), zoo::free_arrow_h(), zoo::free_arrow_v(), zoo::generator()] {
            let hom = build_hom(&unit, &a, &budget).unwrap();
            hom.cat.validate().unwrap();
            assert_eq!(
                counts(&hom),
                (a.objects.len(), a.hcells.len(), a.vcells.len(), a.squares.len())
            );
            assert!(crate::dbl::iso::is_isomorphic(&hom.cat, &a));
            let intro = unit_intro(&a, &hom).unwrap();
            let elim = unit_elim(&a, &hom).unwrap();
            intro.validate(&a, &hom.cat).unwrap();
            elim.validate(&hom.cat, &a).unwrap();
            assert_eq!(elim.after(&intro), DoubleFunctor::identity(&a));
            assert_eq!(intro.after(&elim), DoubleFunctor::identity(&hom.cat));
        }
    }

    #[test]
    fn hom_arrow_arrow_has_expected_shape() {
        let a = zoo::free_arrow_h();
        let budget = Budget::default();
        let hom = build_hom(&a, &a, &budget).unwrap();
        hom.cat.validate().unwrap();
        // Functors arr_h -> arr_h pick an image for the generating
        // horizontal arrow: two endpoints collapsed to an identity, or the
        // arrow itself; that gives three functors, and the hom category is
        // the commuting-triangle shape.
        assert_eq!(counts(&hom), (3, 6, 3, 6));
    }

    #[test]
    fn hom_generator_generator_has_nine_objects() {
        let g = zoo::generator();
        let budget = Budget::default();
        let hom = build_hom(&g, &g, &budget).unwrap();
        hom.cat.validate().unwrap();
        assert_eq!(hom.functors.len(), g.squares.len());
    }

    #[test]
    fn identities_and_composites_validate() {
        let g = zoo::generator();
        let budget = Budget::default();
        let hom = build_hom(&g, &g, &budget).unwrap();
        for x in &hom.hpseudos {
            validate_hpseudo(&g, &g, x).unwrap();
        }
        for y in &hom.vpseudos {
            validate_vpseudo(&g, &g, y).unwrap();
        }
        for m in &hom.mods {
            validate_modification(&g, &g, m).unwrap();
        }
        for x in &hom.hpseudos {
            for z in &hom.hpseudos {
                if x.target == z.source {
                    validate_hpseudo(&g, &g, &compose_hpseudo(&g, &g, x, z)).unwrap();
                }
            }
        }
        for y in &hom.vpseudos {
            for w in &hom.vpseudos {
                if y.target == w.source {
                    validate_vpseudo(&g, &g, &compose_vpseudo(&g, &g, y, w)).unwrap();
                }
            }
        }
    }

    #[test]
    fn strict_hom_is_a_sub_double_category() {
        let a = zoo::free_arrow_h();
        let budget = Budget::default();
        let (strict, inclusion, full) = build_strict_hom(&a, &a, &budget).unwrap();
        strict.cat.validate().unwrap();
        inclusion.validate(&strict.cat, &full.cat).unwrap();
        assert_eq!(strict.functors.len(), full.functors.len());
        assert!(strict.hpseudos.len() <= full.hpseudos.len());
    }

    #[test]
    fn hom_map_along_identities_is_identity() {
        let a = zoo::free_arrow_h();
        let budget = Budget::default();
        let hom = build_hom(&a, &a, &budget).unwrap();
        let ida = DoubleFunctor::identity(&a);
        let f = hom_map(&ida, &ida, &a, &hom, &hom).unwrap();
        assert_eq!(f, DoubleFunctor::identity(&hom.cat));
    }

    #[test]
    fn point_functor_validates() {
        let a = zoo::free_arrow_h();
        let budget = Budget::default();
        let hom = build_hom(&a, &a, &budget).unwrap();
        let p = point_functor(&hom, &DoubleFunctor::identity(&a)).unwrap();
        p.validate(&zoo::terminal(), &hom.cat).unwrap();
    }
}

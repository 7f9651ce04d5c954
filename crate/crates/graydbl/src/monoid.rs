//! Monoid structures on a double category, in flattened form.
//!
//! A [`GrayMonoidData`] equips a finite double category with a unit object
//! `I` and a star operation pairing an object with a cell on either side,
//! together with mixed squares `h∗q`, `v∗p` for 1-cells of opposite
//! directions and invertible interchanger squares `h∗p`, `v∗q` for 1-cells of
//! the same direction. [`check_gray_monoid`] verifies the seven condition
//! families making this a monoid for the tensor of double categories:
//!
//! - (i) each of `X∗−` and `−∗X` is a double functor;
//! - (ii) `I∗− = 1 = −∗I`;
//! - (iii) the three associativity equalities of double functors;
//! - (iv) the twelve mixed associativity equalities of distinguished squares;
//! - (v) pairing with an identity 1-cell gives an identity square;
//! - (vi) pairing with a composite 1-cell expands as the displayed pasting;
//! - (vii) the four naturality families pairing a square with a 1-cell.
//!
//! The data is exactly a bifunctorial cone with both feet and the codomain
//! equal to the carrier, and conditions (i), (v), (vi), (vii) together with
//! interchanger invertibility coincide with the cone conditions; the
//! conversion is [`GrayMonoidData::induced_cone`], and currying that cone
//! yields the classifying functor from the carrier to its self-hom.
//!
//! [`from_strict_monoid`] imports a strictly associative and unital
//! multiplication functor (identity interchangers), and
//! [`derived_multiplication`] assembles the pointwise multiplication maps on
//! the product, which fail to be a double functor exactly up to the
//! interchangers and carry the displayed invertible comparison families.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::dbl::{zoo, FiniteDoubleCategory, HId, ObjId, SqId, VId};
use crate::error::{AxiomFailure, Error, Result};
use crate::functor::DoubleFunctor;
use crate::gray::{validate_cone, TensorCone};

/// A unit object, star maps and interchangers on a carrier double category.
///
/// Table orientation matches [`TensorCone`]: in every mixed table the first
/// index is the left factor of `∗`. `obj_h[x][p]` is `X∗p`, `h_obj[h][y]` is
/// `h∗Y`, `h_v[h][q]` is the square `h∗q` (top `h∗Y`, left `X∗q`, bottom
/// `h∗Y′`, right `X′∗q`), `v_h[v][p]` is `v∗p` (top `X∗p`, left `v∗Y`, bottom
/// `X′∗p`, right `v∗Y′`), `h_h[h][p]` is the vertically invertible
/// interchanger `h∗p` (top `(X∗p);(h∗Y′)`, bottom `(h∗Y);(X′∗p)`, identity
/// vertical sides) and `v_v[v][q]` the horizontally invertible `v∗q` (left
/// `(v∗Y);(X′∗q)`, right `(X∗q);(v∗Y′)`, identity horizontal sides).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrayMonoidData {
    pub carrier: FiniteDoubleCategory,
    /// The unit object `I`.
    pub unit: ObjId,
    /// `X ∗ Y`, indexed `[x][y]`.
    pub obj_obj: Vec<Vec<ObjId>>,
    /// `X ∗ p` for a horizontal 1-cell `p`.
    pub obj_h: Vec<Vec<HId>>,
    /// `X ∗ q` for a vertical 1-cell `q`.
    pub obj_v: Vec<Vec<VId>>,
    /// `X ∗ ω` for a square `ω`.
    pub obj_sq: Vec<Vec<SqId>>,
    /// `h ∗ Y`.
    pub h_obj: Vec<Vec<HId>>,
    /// `v ∗ Y`.
    pub v_obj: Vec<Vec<VId>>,
    /// `ω ∗ Y`.
    pub sq_obj: Vec<Vec<SqId>>,
    /// The mixed square `h ∗ q`.
    pub h_v: Vec<Vec<SqId>>,
    /// The mixed square `v ∗ p`.
    pub v_h: Vec<Vec<SqId>>,
    /// The interchanger `h ∗ p` and its vertical inverse.
    pub h_h: Vec<Vec<SqId>>,
    pub h_h_inv: Vec<Vec<SqId>>,
    /// The interchanger `v ∗ q` and its horizontal inverse.
    pub v_v: Vec<Vec<SqId>>,
    pub v_v_inv: Vec<Vec<SqId>>,
}

impl GrayMonoidData {
    /// The assignment `X ∗ −` as a functor candidate.
    pub fn left_functor(&self, x: ObjId) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj_obj[x.0].clone(),
            h: self.obj_h[x.0].clone(),
            v: self.obj_v[x.0].clone(),
            sq: self.obj_sq[x.0].clone(),
        }
    }

    /// The assignment `− ∗ Y` as a functor candidate.
    pub fn right_functor(&self, y: ObjId) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj_obj.iter().map(|row| row[y.0]).collect(),
            h: self.h_obj.iter().map(|row| row[y.0]).collect(),
            v: self.v_obj.iter().map(|row| row[y.0]).collect(),
            sq: self.sq_obj.iter().map(|row| row[y.0]).collect(),
        }
    }

    /// The data reread as a bifunctorial cone `carrier ⊛ carrier → carrier`.
    pub fn induced_cone(&self) -> TensorCone {
        TensorCone {
            a: self.carrier.clone(),
            b: self.carrier.clone(),
            c: self.carrier.clone(),
            obj_obj: self.obj_obj.clone(),
            obj_h: self.obj_h.clone(),
            obj_v: self.obj_v.clone(),
            obj_sq: self.obj_sq.clone(),
            h_obj: self.h_obj.clone(),
            v_obj: self.v_obj.clone(),
            sq_obj: self.sq_obj.clone(),
            h_v: self.h_v.clone(),
            v_h: self.v_h.clone(),
            h_h: self.h_h.clone(),
            h_h_inv: self.h_h_inv.clone(),
            v_v: self.v_v.clone(),
            v_v_inv: self.v_v_inv.clone(),
        }
    }
}

/// The verdict of [`check_gray_monoid`]: every failure names its condition
/// family (`"(i)"` … `"(vii)"`, or `"(invertibility)"`) and a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    pub ok: bool,
    pub failures: Vec<AxiomFailure>,
}

fn table_shape_ok<T>(table: &[Vec<T>], rows: usize, cols: usize) -> bool {
    table.len() == rows && table.iter().all(|r| r.len() == cols)
}

/// First cell on which two parallel functor candidates disagree.
fn first_diff(c: &FiniteDoubleCategory, lhs: &DoubleFunctor, rhs: &DoubleFunctor) -> Option<String> {
    for x in c.obj_ids() {
        if lhs.obj(x) != rhs.obj(x) {
            return Some(format!("object {}", c.objects[x.0]));
        }
    }
    for f in c.h_ids() {
        if lhs.h(f) != rhs.h(f) {
            return Some(format!("horizontal 1-cell {}", c.hcell(f).name));
        }
    }
    for f in c.v_ids() {
        if lhs.v(f) != rhs.v(f) {
            return Some(format!("vertical 1-cell {}", c.vcell(f).name));
        }
    }
    for s in c.sq_ids() {
        if lhs.sq(s) != rhs.sq(s) {
            return Some(format!("square {}", c.square(s).name));
        }
    }
    None
}

/// Check the seven condition families on monoid data.
///
/// Shape problems, out-of-range ids and wrongly framed mixed squares or
/// interchangers are structural errors; everything else is collected into the
/// report, one failure per violated instance, grouped under the family name.
pub fn check_gray_monoid(m: &GrayMonoidData) -> Result<MonoidReport> {
    let c = &m.carrier;
    let (no, nh, nv, ns) = (c.objects.len(), c.hcells.len(), c.vcells.len(), c.squares.len());

    let shapes = [
        table_shape_ok(&m.obj_obj, no, no),
        table_shape_ok(&m.obj_h, no, nh),
        table_shape_ok(&m.obj_v, no, nv),
        table_shape_ok(&m.obj_sq, no, ns),
        table_shape_ok(&m.h_obj, nh, no),
        table_shape_ok(&m.v_obj, nv, no),
        table_shape_ok(&m.sq_obj, ns, no),
        table_shape_ok(&m.h_v, nh, nv),
        table_shape_ok(&m.v_h, nv, nh),
        table_shape_ok(&m.h_h, nh, nh),
        table_shape_ok(&m.h_h_inv, nh, nh),
        table_shape_ok(&m.v_v, nv, nv),
        table_shape_ok(&m.v_v_inv, nv, nv),
    ];
    if shapes.iter().any(|ok| !ok) {
        return Err(Error::structure("monoid tables have the wrong shape"));
    }
    if m.unit.0 >= no {
        return Err(Error::structure("unit object out of range"));
    }
    let ranges_ok = m.obj_obj.iter().flatten().all(|x| x.0 < no)
        && m.obj_h.iter().chain(&m.h_obj).flatten().all(|f| f.0 < nh)
        && m.obj_v.iter().chain(&m.v_obj).flatten().all(|f| f.0 < nv)
        && [&m.obj_sq, &m.sq_obj, &m.h_v, &m.v_h, &m.h_h, &m.h_h_inv, &m.v_v, &m.v_v_inv]
            .iter()
            .flat_map(|t| t.iter().flatten())
            .all(|s| s.0 < ns);
    if !ranges_ok {
        return Err(Error::structure("monoid table entry out of range"));
    }

    // Frames of the mixed squares and interchangers.
    for h in c.h_ids() {
        let (x, x2) = (c.hcell(h).src, c.hcell(h).tgt);
        for q in c.v_ids() {
            let (y, y2) = (c.vcell(q).src, c.vcell(q).tgt);
            let sq = c.square(m.h_v[h.0][q.0]);
            if sq.top != m.h_obj[h.0][y.0]
                || sq.left != m.obj_v[x.0][q.0]
                || sq.bottom != m.h_obj[h.0][y2.0]
                || sq.right != m.obj_v[x2.0][q.0]
            {
                return Err(Error::structure(format!(
                    "square for ({}, {}) has the wrong frame",
                    c.hcell(h).name,
                    c.vcell(q).name
                )));
            }
        }
        for p in c.h_ids() {
            let (y, y2) = (c.hcell(p).src, c.hcell(p).tgt);
            let top = c.comp_h(m.obj_h[x.0][p.0], m.h_obj[h.0][y2.0]);
            let bottom = c.comp_h(m.h_obj[h.0][y.0], m.obj_h[x2.0][p.0]);
            let sq = c.square(m.h_h[h.0][p.0]);
            if sq.top != top
                || sq.bottom != bottom
                || sq.left != c.v_id(m.obj_obj[x.0][y.0])
                || sq.right != c.v_id(m.obj_obj[x2.0][y2.0])
            {
                return Err(Error::structure(format!(
                    "interchanger for ({}, {}) has the wrong frame",
                    c.hcell(h).name,
                    c.hcell(p).name
                )));
            }
        }
    }
    for v in c.v_ids() {
        let (x, x2) = (c.vcell(v).src, c.vcell(v).tgt);
        for p in c.h_ids() {
            let (y, y2) = (c.hcell(p).src, c.hcell(p).tgt);
            let sq = c.square(m.v_h[v.0][p.0]);
            if sq.top != m.obj_h[x.0][p.0]
                || sq.left != m.v_obj[v.0][y.0]
                || sq.bottom != m.obj_h[x2.0][p.0]
                || sq.right != m.v_obj[v.0][y2.0]
            {
                return Err(Error::structure(format!(
                    "square for ({}, {}) has the wrong frame",
                    c.vcell(v).name,
                    c.hcell(p).name
                )));
            }
        }
        for q in c.v_ids() {
            let (y, y2) = (c.vcell(q).src, c.vcell(q).tgt);
            let left = c.comp_v(m.v_obj[v.0][y.0], m.obj_v[x2.0][q.0]);
            let right = c.comp_v(m.obj_v[x.0][q.0], m.v_obj[v.0][y2.0]);
            let sq = c.square(m.v_v[v.0][q.0]);
            if sq.left != left
                || sq.right != right
                || sq.top != c.h_id(m.obj_obj[x.0][y.0])
                || sq.bottom != c.h_id(m.obj_obj[x2.0][y2.0])
            {
                return Err(Error::structure(format!(
                    "interchanger for ({}, {}) has the wrong frame",
                    c.vcell(v).name,
                    c.vcell(q).name
                )));
            }
        }
    }

    let mut errs: Vec<AxiomFailure> = Vec::new();
    let mut fail = |law: &str, details: String| {
        errs.push(AxiomFailure { law: law.to_string(), details })
    };

    // (i): the star against a fixed object is a double functor on each side.
    for x in c.obj_ids() {
        if let Err(fs) = m.left_functor(x).validate(c, c) {
            for f in fs {
                fail("(i)", format!("{} ∗ −: {}", c.objects[x.0], f));
            }
        }
        if let Err(fs) = m.right_functor(x).validate(c, c) {
            for f in fs {
                fail("(i)", format!("− ∗ {}: {}", c.objects[x.0], f));
            }
        }
    }

    // Invertibility of the interchangers.
    for h in c.h_ids() {
        for p in c.h_ids() {
            let (s, i) = (m.h_h[h.0][p.0], m.h_h_inv[h.0][p.0]);
            let (top, bottom) = (c.square(s).top, c.square(s).bottom);
            if c.try_sq_v(s, i) != Some(c.sq_v_id(top))
                || c.try_sq_v(i, s) != Some(c.sq_v_id(bottom))
            {
                fail(
                    "(invertibility)",
                    format!(
                        "interchanger for ({}, {}) is not vertically invertible",
                        c.hcell(h).name,
                        c.hcell(p).name
                    ),
                );
            }
        }
    }
    for v in c.v_ids() {
        for q in c.v_ids() {
            let (s, i) = (m.v_v[v.0][q.0], m.v_v_inv[v.0][q.0]);
            let (left, right) = (c.square(s).left, c.square(s).right);
            if c.try_sq_h(s, i) != Some(c.sq_h_id(left))
                || c.try_sq_h(i, s) != Some(c.sq_h_id(right))
            {
                fail(
                    "(invertibility)",
                    format!(
                        "interchanger for ({}, {}) is not horizontally invertible",
                        c.vcell(v).name,
                        c.vcell(q).name
                    ),
                );
            }
        }
    }

    // (ii): the unit object acts as the identity functor on both sides.
    let id = DoubleFunctor::identity(c);
    if let Some(w) = first_diff(c, &m.left_functor(m.unit), &id) {
        fail("(ii)", format!("I ∗ − is not the identity at {w}"));
    }
    if let Some(w) = first_diff(c, &m.right_functor(m.unit), &id) {
        fail("(ii)", format!("− ∗ I is not the identity at {w}"));
    }

    // (iii): the three associativity equalities of double functors, pointwise.
    for x in c.obj_ids() {
        let lx = m.left_functor(x);
        let rx = m.right_functor(x);
        for y in c.obj_ids() {
            let ly = m.left_functor(y);
            let ry = m.right_functor(y);
            let xy = m.obj_obj[x.0][y.0];
            if let Some(w) = first_diff(c, &lx.after(&ly), &m.left_functor(xy)) {
                fail(
                    "(iii)",
                    format!(
                        "{} ∗ ({} ∗ −) ≠ ({} ∗ {}) ∗ − at {w}",
                        c.objects[x.0], c.objects[y.0], c.objects[x.0], c.objects[y.0]
                    ),
                );
            }
            if let Some(w) = first_diff(c, &lx.after(&ry), &ry.after(&lx)) {
                fail(
                    "(iii)",
                    format!(
                        "{} ∗ (− ∗ {}) ≠ ({} ∗ −) ∗ {} at {w}",
                        c.objects[x.0], c.objects[y.0], c.objects[x.0], c.objects[y.0]
                    ),
                );
            }
            if let Some(w) = first_diff(c, &ry.after(&rx), &m.right_functor(xy)) {
                fail(
                    "(iii)",
                    format!(
                        "(− ∗ {}) ∗ {} ≠ − ∗ ({} ∗ {}) at {w}",
                        c.objects[x.0], c.objects[y.0], c.objects[x.0], c.objects[y.0]
                    ),
                );
            }
        }
    }

    // (iv): the twelve equalities of distinguished squares built from one
    // object and two 1-cells.
    for x in c.obj_ids() {
        let xn = &c.objects[x.0];
        for h in c.h_ids() {
            let hn = &c.hcell(h).name;
            for q in c.v_ids() {
                let qn = &c.vcell(q).name;
                if m.h_v[h.0][m.obj_v[x.0][q.0].0] != m.h_v[m.h_obj[h.0][x.0].0][q.0] {
                    fail("(iv)", format!("{hn} ∗ ({xn} ∗ {qn}) ≠ ({hn} ∗ {xn}) ∗ {qn}"));
                }
                if m.h_v[m.obj_h[x.0][h.0].0][q.0] != m.obj_sq[x.0][m.h_v[h.0][q.0].0] {
                    fail("(iv)", format!("({xn} ∗ {hn}) ∗ {qn} ≠ {xn} ∗ ({hn} ∗ {qn})"));
                }
                if m.h_v[h.0][m.v_obj[q.0][x.0].0] != m.sq_obj[m.h_v[h.0][q.0].0][x.0] {
                    fail("(iv)", format!("{hn} ∗ ({qn} ∗ {xn}) ≠ ({hn} ∗ {qn}) ∗ {xn}"));
                }
            }
            for p in c.h_ids() {
                let pn = &c.hcell(p).name;
                if m.h_h[h.0][m.obj_h[x.0][p.0].0] != m.h_h[m.h_obj[h.0][x.0].0][p.0] {
                    fail("(iv)", format!("{hn} ∗ ({xn} ∗ {pn}) ≠ ({hn} ∗ {xn}) ∗ {pn}"));
                }
                if m.h_h[m.obj_h[x.0][h.0].0][p.0] != m.obj_sq[x.0][m.h_h[h.0][p.0].0] {
                    fail("(iv)", format!("({xn} ∗ {hn}) ∗ {pn} ≠ {xn} ∗ ({hn} ∗ {pn})"));
                }
                if m.h_h[h.0][m.h_obj[p.0][x.0].0] != m.sq_obj[m.h_h[h.0][p.0].0][x.0] {
                    fail("(iv)", format!("{hn} ∗ ({pn} ∗ {xn}) ≠ ({hn} ∗ {pn}) ∗ {xn}"));
                }
            }
        }
        for v in c.v_ids() {
            let vn = &c.vcell(v).name;
            for p in c.h_ids() {
                let pn = &c.hcell(p).name;
                if m.v_h[v.0][m.obj_h[x.0][p.0].0] != m.v_h[m.v_obj[v.0][x.0].0][p.0] {
                    fail("(iv)", format!("{vn} ∗ ({xn} ∗ {pn}) ≠ ({vn} ∗ {xn}) ∗ {pn}"));
                }
                if m.v_h[m.obj_v[x.0][v.0].0][p.0] != m.obj_sq[x.0][m.v_h[v.0][p.0].0] {
                    fail("(iv)", format!("({xn} ∗ {vn}) ∗ {pn} ≠ {xn} ∗ ({vn} ∗ {pn})"));
                }
                if m.v_h[v.0][m.h_obj[p.0][x.0].0] != m.sq_obj[m.v_h[v.0][p.0].0][x.0] {
                    fail("(iv)", format!("{vn} ∗ ({pn} ∗ {xn}) ≠ ({vn} ∗ {pn}) ∗ {xn}"));
                }
            }
            for q in c.v_ids() {
                let qn = &c.vcell(q).name;
                if m.v_v[v.0][m.obj_v[x.0][q.0].0] != m.v_v[m.v_obj[v.0][x.0].0][q.0] {
                    fail("(iv)", format!("{vn} ∗ ({xn} ∗ {qn}) ≠ ({vn} ∗ {xn}) ∗ {qn}"));
                }
                if m.v_v[m.obj_v[x.0][v.0].0][q.0] != m.obj_sq[x.0][m.v_v[v.0][q.0].0] {
                    fail("(iv)", format!("({xn} ∗ {vn}) ∗ {qn} ≠ {xn} ∗ ({vn} ∗ {qn})"));
                }
                if m.v_v[v.0][m.v_obj[q.0][x.0].0] != m.sq_obj[m.v_v[v.0][q.0].0][x.0] {
                    fail("(iv)", format!("{vn} ∗ ({qn} ∗ {xn}) ≠ ({vn} ∗ {qn}) ∗ {xn}"));
                }
            }
        }
    }

    // (v): pairing with an identity 1-cell gives an identity square.
    for h in c.h_ids() {
        for y in c.obj_ids() {
            let id = c.sq_v_id(m.h_obj[h.0][y.0]);
            if m.h_v[h.0][c.v_id(y).0] != id {
                fail("(v)", format!("({}, 1{}) is not an identity", c.hcell(h).name, c.objects[y.0]));
            }
            if m.h_h[h.0][c.h_id(y).0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger ({}, 1{}) is not an identity",
                        c.hcell(h).name,
                        c.objects[y.0]
                    ),
                );
            }
        }
    }
    for v in c.v_ids() {
        for y in c.obj_ids() {
            let id = c.sq_h_id(m.v_obj[v.0][y.0]);
            if m.v_h[v.0][c.h_id(y).0] != id {
                fail("(v)", format!("({}, 1{}) is not an identity", c.vcell(v).name, c.objects[y.0]));
            }
            if m.v_v[v.0][c.v_id(y).0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger ({}, 1{}) is not an identity",
                        c.vcell(v).name,
                        c.objects[y.0]
                    ),
                );
            }
        }
    }
    for x in c.obj_ids() {
        for p in c.h_ids() {
            let id = c.sq_v_id(m.obj_h[x.0][p.0]);
            if m.v_h[c.v_id(x).0][p.0] != id {
                fail("(v)", format!("(1{}, {}) is not an identity", c.objects[x.0], c.hcell(p).name));
            }
            if m.h_h[c.h_id(x).0][p.0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger (1{}, {}) is not an identity",
                        c.objects[x.0],
                        c.hcell(p).name
                    ),
                );
            }
        }
        for q in c.v_ids() {
            let id = c.sq_h_id(m.obj_v[x.0][q.0]);
            if m.h_v[c.h_id(x).0][q.0] != id {
                fail("(v)", format!("(1{}, {}) is not an identity", c.objects[x.0], c.vcell(q).name));
            }
            if m.v_v[c.v_id(x).0][q.0] != id {
                fail(
                    "(v)",
                    format!(
                        "interchanger (1{}, {}) is not an identity",
                        c.objects[x.0],
                        c.vcell(q).name
                    ),
                );
            }
        }
    }

    // Guarded pastings: pairing with composites and the naturality families
    // paste squares whose frames are only constrained by (i), so a broken
    // functor table can make a pasting undefined; that counts as a failure of
    // the family rather than a panic.
    let pv = |a: SqId, b: SqId| c.try_sq_v(a, b);
    let ph = |a: SqId, b: SqId| c.try_sq_h(a, b);

    // (vi): pairing with a composite 1-cell expands as the displayed pasting.
    for h in c.h_ids() {
        let (x, x2) = (c.hcell(h).src, c.hcell(h).tgt);
        for (&(q, q2), &qq) in &c.v_comp {
            if pv(m.h_v[h.0][q.0], m.h_v[h.0][q2.0]) != Some(m.h_v[h.0][qq.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({}, {}·{}) does not expand",
                        c.hcell(h).name,
                        c.vcell(q).name,
                        c.vcell(q2).name
                    ),
                );
            }
        }
        for (&(p, p2), &pp) in &c.h_comp {
            let row1 = ph(c.sq_v_id(m.obj_h[x.0][p.0]), m.h_h[h.0][p2.0]);
            let row2 = ph(m.h_h[h.0][p.0], c.sq_v_id(m.obj_h[x2.0][p2.0]));
            let rhs = row1.zip(row2).and_then(|(a, b)| pv(a, b));
            if rhs != Some(m.h_h[h.0][pp.0]) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({}, {};{}) does not expand",
                        c.hcell(h).name,
                        c.hcell(p).name,
                        c.hcell(p2).name
                    ),
                );
            }
        }
    }
    for (&(h, h2), &hh) in &c.h_comp {
        for q in c.v_ids() {
            if ph(m.h_v[h.0][q.0], m.h_v[h2.0][q.0]) != Some(m.h_v[hh.0][q.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({};{}, {}) does not expand",
                        c.hcell(h).name,
                        c.hcell(h2).name,
                        c.vcell(q).name
                    ),
                );
            }
        }
        for p in c.h_ids() {
            let (y, y2) = (c.hcell(p).src, c.hcell(p).tgt);
            let row1 = ph(m.h_h[h.0][p.0], c.sq_v_id(m.h_obj[h2.0][y2.0]));
            let row2 = ph(c.sq_v_id(m.h_obj[h.0][y.0]), m.h_h[h2.0][p.0]);
            let rhs = row1.zip(row2).and_then(|(a, b)| pv(a, b));
            if rhs != Some(m.h_h[hh.0][p.0]) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({};{}, {}) does not expand",
                        c.hcell(h).name,
                        c.hcell(h2).name,
                        c.hcell(p).name
                    ),
                );
            }
        }
    }
    for v in c.v_ids() {
        let (x, x2) = (c.vcell(v).src, c.vcell(v).tgt);
        for (&(p, p2), &pp) in &c.h_comp {
            if ph(m.v_h[v.0][p.0], m.v_h[v.0][p2.0]) != Some(m.v_h[v.0][pp.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({}, {};{}) does not expand",
                        c.vcell(v).name,
                        c.hcell(p).name,
                        c.hcell(p2).name
                    ),
                );
            }
        }
        for (&(q, q2), &qq) in &c.v_comp {
            let col1 = pv(m.v_v[v.0][q.0], c.sq_h_id(m.obj_v[x2.0][q2.0]));
            let col2 = pv(c.sq_h_id(m.obj_v[x.0][q.0]), m.v_v[v.0][q2.0]);
            let rhs = col1.zip(col2).and_then(|(a, b)| ph(a, b));
            if rhs != Some(m.v_v[v.0][qq.0]) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({}, {}·{}) does not expand",
                        c.vcell(v).name,
                        c.vcell(q).name,
                        c.vcell(q2).name
                    ),
                );
            }
        }
    }
    for (&(v, v2), &vv) in &c.v_comp {
        for p in c.h_ids() {
            if pv(m.v_h[v.0][p.0], m.v_h[v2.0][p.0]) != Some(m.v_h[vv.0][p.0]) {
                fail(
                    "(vi)",
                    format!(
                        "({}·{}, {}) does not expand",
                        c.vcell(v).name,
                        c.vcell(v2).name,
                        c.hcell(p).name
                    ),
                );
            }
        }
        for q in c.v_ids() {
            let (y, y2) = (c.vcell(q).src, c.vcell(q).tgt);
            let col1 = pv(c.sq_h_id(m.v_obj[v.0][y.0]), m.v_v[v2.0][q.0]);
            let col2 = pv(m.v_v[v.0][q.0], c.sq_h_id(m.v_obj[v2.0][y2.0]));
            let rhs = col1.zip(col2).and_then(|(a, b)| ph(a, b));
            if rhs != Some(m.v_v[vv.0][q.0]) {
                fail(
                    "(vi)",
                    format!(
                        "interchanger ({}·{}, {}) does not expand",
                        c.vcell(v).name,
                        c.vcell(v2).name,
                        c.vcell(q).name
                    ),
                );
            }
        }
    }

    // (vii): the four naturality families pairing a square with a 1-cell.
    for w in c.sq_ids() {
        let sq = c.square(w).clone();
        let (p, q, s, r) = (sq.top, sq.left, sq.bottom, sq.right);
        for h in c.h_ids() {
            let (x, x2) = (c.hcell(h).src, c.hcell(h).tgt);
            let lhs = ph(m.obj_sq[x.0][w.0], m.h_v[h.0][r.0]).and_then(|a| pv(a, m.h_h[h.0][s.0]));
            let rhs =
                ph(m.h_v[h.0][q.0], m.obj_sq[x2.0][w.0]).and_then(|b| pv(m.h_h[h.0][p.0], b));
            if lhs.is_none() || lhs != rhs {
                fail("(vii)", format!("naturality of ({}, −) at {}", c.hcell(h).name, sq.name));
            }
        }
        for v in c.v_ids() {
            let (x, x2) = (c.vcell(v).src, c.vcell(v).tgt);
            let lhs =
                pv(m.obj_sq[x.0][w.0], m.v_h[v.0][s.0]).and_then(|a| ph(m.v_v[v.0][q.0], a));
            let rhs =
                pv(m.v_h[v.0][p.0], m.obj_sq[x2.0][w.0]).and_then(|b| ph(b, m.v_v[v.0][r.0]));
            if lhs.is_none() || lhs != rhs {
                fail("(vii)", format!("naturality of ({}, −) at {}", c.vcell(v).name, sq.name));
            }
        }
        for h in c.h_ids() {
            let (x, x2) = (c.hcell(h).src, c.hcell(h).tgt);
            let lhs =
                ph(m.v_h[q.0][h.0], m.sq_obj[w.0][x2.0]).and_then(|a| pv(a, m.h_h[s.0][h.0]));
            let rhs =
                ph(m.sq_obj[w.0][x.0], m.v_h[r.0][h.0]).and_then(|b| pv(m.h_h[p.0][h.0], b));
            if lhs.is_none() || lhs != rhs {
                fail("(vii)", format!("naturality of (−, {}) at {}", c.hcell(h).name, sq.name));
            }
        }
        for v in c.v_ids() {
            let (x, x2) = (c.vcell(v).src, c.vcell(v).tgt);
            let lhs =
                pv(m.h_v[p.0][v.0], m.sq_obj[w.0][x2.0]).and_then(|a| ph(m.v_v[q.0][v.0], a));
            let rhs =
                pv(m.sq_obj[w.0][x.0], m.h_v[s.0][v.0]).and_then(|b| ph(b, m.v_v[r.0][v.0]));
            if lhs.is_none() || lhs != rhs {
                fail("(vii)", format!("naturality of (−, {}) at {}", c.vcell(v).name, sq.name));
            }
        }
    }

    Ok(MonoidReport { ok: errs.is_empty(), failures: errs })
}

/// Cross-module oracle: the monoid checker restricted to the cone condition
/// families must classify the data exactly as [`validate_cone`] classifies
/// the induced cone — same structural verdict, and the same set of failing
/// families among `(i)`, `(invertibility)`, `(v)`, `(vi)`, `(vii)`.
pub fn agrees_with_cone_checker(m: &GrayMonoidData) -> bool {
    const CONE_FAMILIES: [&str; 5] = ["(i)", "(invertibility)", "(v)", "(vi)", "(vii)"];
    let mine: Option<BTreeSet<String>> = match check_gray_monoid(m) {
        Err(_) => None,
        Ok(report) => Some(
            report
                .failures
                .iter()
                .filter(|f| CONE_FAMILIES.contains(&f.law.as_str()))
                .map(|f| f.law.clone())
                .collect(),
        ),
    };
    let cone: Option<BTreeSet<String>> = match validate_cone(&m.induced_cone()) {
        Ok(()) => Some(BTreeSet::new()),
        Err(Error::Axioms(fs)) => Some(fs.iter().map(|f| f.law.clone()).collect()),
        Err(_) => None,
    };
    mine == cone
}

/// Import a strict monoidal structure: a multiplication functor on the
/// cartesian product that is strictly associative and unital. The star maps
/// are read off the functor tables and all interchangers are identities; the
/// result is checked and rejected (as invalid input) if the multiplication is
/// not associative/unital.
pub fn from_strict_monoid(
    carrier: &FiniteDoubleCategory,
    mult: &DoubleFunctor,
    unit: ObjId,
) -> Result<GrayMonoidData> {
    let prod = zoo::product(carrier, carrier);
    mult.validate(&prod, carrier).map_err(Error::Axioms)?;
    let (no, nh, nv, ns) = (
        carrier.objects.len(),
        carrier.hcells.len(),
        carrier.vcells.len(),
        carrier.squares.len(),
    );
    let ob = |x: usize, y: usize| mult.obj[x * no + y];
    let hc = |f: usize, g: usize| mult.h[f * nh + g];
    let vc = |f: usize, g: usize| mult.v[f * nv + g];
    let sq = |s: usize, t: usize| mult.sq[s * ns + t];
    let h1 = |x: ObjId| carrier.h_id(x).0;
    let v1 = |x: ObjId| carrier.v_id(x).0;
    // The identity square on an object, as paired against arbitrary squares.
    let s1 = |x: ObjId| carrier.sq_v_id(carrier.h_id(x)).0;

    let m = GrayMonoidData {
        carrier: carrier.clone(),
        unit,
        obj_obj: (0..no).map(|x| (0..no).map(|y| ob(x, y)).collect()).collect(),
        obj_h: (0..no)
            .map(|x| (0..nh).map(|p| hc(h1(ObjId(x)), p)).collect())
            .collect(),
        obj_v: (0..no)
            .map(|x| (0..nv).map(|q| vc(v1(ObjId(x)), q)).collect())
            .collect(),
        obj_sq: (0..no)
            .map(|x| (0..ns).map(|w| sq(s1(ObjId(x)), w)).collect())
            .collect(),
        h_obj: (0..nh)
            .map(|h| (0..no).map(|y| hc(h, h1(ObjId(y)))).collect())
            .collect(),
        v_obj: (0..nv)
            .map(|v| (0..no).map(|y| vc(v, v1(ObjId(y)))).collect())
            .collect(),
        sq_obj: (0..ns)
            .map(|w| (0..no).map(|y| sq(w, s1(ObjId(y)))).collect())
            .collect(),
        h_v: (0..nh)
            .map(|h| {
                (0..nv)
                    .map(|q| sq(carrier.sq_v_id(HId(h)).0, carrier.sq_h_id(VId(q)).0))
                    .collect()
            })
            .collect(),
        v_h: (0..nv)
            .map(|v| {
                (0..nh)
                    .map(|p| sq(carrier.sq_h_id(VId(v)).0, carrier.sq_v_id(HId(p)).0))
                    .collect()
            })
            .collect(),
        h_h: (0..nh)
            .map(|h| {
                (0..nh)
                    .map(|p| carrier.sq_v_id(hc(h, p)))
                    .collect()
            })
            .collect(),
        h_h_inv: (0..nh)
            .map(|h| {
                (0..nh)
                    .map(|p| carrier.sq_v_id(hc(h, p)))
                    .collect()
            })
            .collect(),
        v_v: (0..nv)
            .map(|v| (0..nv).map(|q| carrier.sq_h_id(vc(v, q))).collect())
            .collect(),
        v_v_inv: (0..nv)
            .map(|v| (0..nv).map(|q| carrier.sq_h_id(vc(v, q))).collect())
            .collect(),
    };
    let report = check_gray_monoid(&m)?;
    if let Some(f) = report.failures.first() {
        return Err(Error::Input(format!(
            "multiplication is not strictly associative/unital: {f}"
        )));
    }
    Ok(m)
}

/// The pointwise multiplication maps `carrier × carrier → carrier` derived
/// from monoid data, with a report on how far they are from a double functor.
///
/// The maps preserve identities but preserve the two compositions only up to
/// the displayed invertible comparison families, whose components are the
/// whiskered interchangers; `h_composition_witness` / `v_composition_witness`
/// name a composable pair (of 1-cells or squares) where strict preservation
/// fails, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedMultiplication {
    /// Cell maps out of `zoo::product(carrier, carrier)`, in its index order.
    pub obj: Vec<ObjId>,
    pub h: Vec<HId>,
    pub v: Vec<VId>,
    pub sq: Vec<SqId>,
    pub preserves_identities: bool,
    pub h_composition_witness: Option<String>,
    pub v_composition_witness: Option<String>,
    /// Comparison families exist with the right frames and are invertible.
    pub families_ok: bool,
}

/// Assemble the derived multiplication of valid monoid data.
pub fn derived_multiplication(m: &GrayMonoidData) -> Result<DerivedMultiplication> {
    let report = check_gray_monoid(m)?;
    if let Some(f) = report.failures.first() {
        return Err(Error::Input(format!("monoid data is invalid: {f}")));
    }
    let c = &m.carrier;
    let (nh, nv, ns) = (c.hcells.len(), c.vcells.len(), c.squares.len());
    let prod = zoo::product(c, c);

    let mut obj = Vec::new();
    for x in c.obj_ids() {
        for y in c.obj_ids() {
            obj.push(m.obj_obj[x.0][y.0]);
        }
    }
    // (h, p) ↦ (h∗Y);(X′∗p) for h: X → X′ and p: Y → Y′.
    let mut h = Vec::new();
    for hc in c.h_ids() {
        let x2 = c.hcell(hc).tgt;
        for p in c.h_ids() {
            let y = c.hcell(p).src;
            h.push(c.comp_h(m.h_obj[hc.0][y.0], m.obj_h[x2.0][p.0]));
        }
    }
    // (f, q) ↦ (f∗Y)·(X′∗q).
    let mut v = Vec::new();
    for f in c.v_ids() {
        let x2 = c.vcell(f).tgt;
        for q in c.v_ids() {
            let y = c.vcell(q).src;
            v.push(c.comp_v(m.v_obj[f.0][y.0], m.obj_v[x2.0][q.0]));
        }
    }
    // (ω, θ) ↦ the 2×2 pasting of ω∗Y, g∗p, k∗q and X‴∗θ, where g and k are
    // the right and bottom edges of ω and p, q the top and left edges of θ.
    let mut sq = Vec::new();
    for w in c.sq_ids() {
        let (k, g) = (c.square(w).bottom, c.square(w).right);
        let x3 = c.hcell(k).tgt;
        for t in c.sq_ids() {
            let (p, q) = (c.square(t).top, c.square(t).left);
            let y = c.hcell(p).src;
            let row1 = c.paste_h(m.sq_obj[w.0][y.0], m.v_h[g.0][p.0]);
            let row2 = c.paste_h(m.h_v[k.0][q.0], m.obj_sq[x3.0][t.0]);
            sq.push(c.paste_v(row1, row2));
        }
    }

    let mut preserves_identities = true;
    for x in prod.obj_ids() {
        if h[prod.h_id(x).0] != c.h_id(obj[x.0]) || v[prod.v_id(x).0] != c.v_id(obj[x.0]) {
            preserves_identities = false;
        }
    }
    for f in prod.h_ids() {
        if sq[prod.sq_v_id(f).0] != c.sq_v_id(h[f.0]) {
            preserves_identities = false;
        }
    }
    for f in prod.v_ids() {
        if sq[prod.sq_h_id(f).0] != c.sq_h_id(v[f.0]) {
            preserves_identities = false;
        }
    }

    let mut h_witness = None;
    for (&(f1, f2), &cc) in &prod.h_comp {
        if h[cc.0] != c.comp_h(h[f1.0], h[f2.0]) {
            h_witness = Some(format!(
                "1-cells {} ; {}",
                prod.hcell(f1).name,
                prod.hcell(f2).name
            ));
            break;
        }
    }
    if h_witness.is_none() {
        for (&(s1, s2), &cc) in &prod.sq_h_comp {
            if c.try_sq_h(sq[s1.0], sq[s2.0]) != Some(sq[cc.0]) {
                h_witness = Some(format!(
                    "squares {} ; {}",
                    prod.square(s1).name,
                    prod.square(s2).name
                ));
                break;
            }
        }
    }
    let mut v_witness = None;
    for (&(f1, f2), &cc) in &prod.v_comp {
        if v[cc.0] != c.comp_v(v[f1.0], v[f2.0]) {
            v_witness = Some(format!(
                "1-cells {} · {}",
                prod.vcell(f1).name,
                prod.vcell(f2).name
            ));
            break;
        }
    }
    if v_witness.is_none() {
        for (&(s1, s2), &cc) in &prod.sq_v_comp {
            if c.try_sq_v(sq[s1.0], sq[s2.0]) != Some(sq[cc.0]) {
                v_witness = Some(format!(
                    "squares {} · {}",
                    prod.square(s1).name,
                    prod.square(s2).name
                ));
                break;
            }
        }
    }

    // The comparison families: for a horizontally composable pair
    // (h, p), (k, s) the component is the interchanger k∗p whiskered by
    // identity squares on h∗Y and X″∗s; it must run from the composite of the
    // images to the image of the composite and be vertically invertible. The
    // vertical family is dual.
    let mut families_ok = true;
    for (&(f1, f2), &cc) in &prod.h_comp {
        let (hc, p) = (f1.0 / nh, f1.0 % nh);
        let (k, s) = (f2.0 / nh, f2.0 % nh);
        let y = c.hcell(HId(p)).src;
        let x2b = c.hcell(HId(k)).tgt;
        let left = c.sq_v_id(m.h_obj[hc][y.0]);
        let right = c.sq_v_id(m.obj_h[x2b.0][s]);
        let comp = c
            .try_sq_h(m.h_h[k][p], right)
            .and_then(|a| c.try_sq_h(left, a));
        let inv = c
            .try_sq_h(m.h_h_inv[k][p], right)
            .and_then(|a| c.try_sq_h(left, a));
        let ok = match (comp, inv) {
            (Some(cmp), Some(inv)) => {
                let fr = c.square(cmp).clone();
                fr.top == c.comp_h(h[f1.0], h[f2.0])
                    && fr.bottom == h[cc.0]
                    && c.try_sq_v(cmp, inv) == Some(c.sq_v_id(fr.top))
                    && c.try_sq_v(inv, cmp) == Some(c.sq_v_id(fr.bottom))
            }
            _ => false,
        };
        if !ok {
            families_ok = false;
        }
    }
    for (&(f1, f2), &cc) in &prod.v_comp {
        let (fv, q) = (f1.0 / nv, f1.0 % nv);
        let (g, r) = (f2.0 / nv, f2.0 % nv);
        let y = c.vcell(VId(q)).src;
        let x2b = c.vcell(VId(g)).tgt;
        let top = c.sq_h_id(m.v_obj[fv][y.0]);
        let bottom = c.sq_h_id(m.obj_v[x2b.0][r]);
        let comp = c
            .try_sq_v(m.v_v[g][q], bottom)
            .and_then(|a| c.try_sq_v(top, a));
        let inv = c
            .try_sq_v(m.v_v_inv[g][q], bottom)
            .and_then(|a| c.try_sq_v(top, a));
        let ok = match (comp, inv) {
            (Some(cmp), Some(inv)) => {
                let fr = c.square(cmp).clone();
                fr.left == v[cc.0]
                    && fr.right == c.comp_v(v[f1.0], v[f2.0])
                    && c.try_sq_h(cmp, inv) == Some(c.sq_h_id(fr.left))
                    && c.try_sq_h(inv, cmp) == Some(c.sq_h_id(fr.right))
            }
            _ => false,
        };
        if !ok {
            families_ok = false;
        }
    }
    let _ = ns;

    Ok(DerivedMultiplication {
        obj,
        h,
        v,
        sq,
        preserves_identities,
        h_composition_witness: h_witness,
        v_composition_witness: v_witness,
        families_ok,
    })
}

// ---------------------------------------------------------------------------
// Stock monoid data.

/// Monoid data on a discrete carrier from a plain multiplication table
/// (identity cells everywhere, identity interchangers). The table is not
/// required to be a monoid: a non-associative table or a wrong unit yields
/// data that fails the corresponding condition.
pub fn discrete_monoid_data(table: &[Vec<usize>], unit: usize) -> GrayMonoidData {
    let n = table.len();
    let carrier = zoo::discrete(n);
    let t_obj: Vec<Vec<ObjId>> =
        table.iter().map(|row| row.iter().map(|&z| ObjId(z)).collect()).collect();
    let t_h: Vec<Vec<HId>> =
        table.iter().map(|row| row.iter().map(|&z| HId(z)).collect()).collect();
    let t_v: Vec<Vec<VId>> =
        table.iter().map(|row| row.iter().map(|&z| VId(z)).collect()).collect();
    let t_sq: Vec<Vec<SqId>> =
        table.iter().map(|row| row.iter().map(|&z| SqId(z)).collect()).collect();
    GrayMonoidData {
        carrier,
        unit: ObjId(unit),
        obj_obj: t_obj,
        obj_h: t_h.clone(),
        obj_v: t_v.clone(),
        obj_sq: t_sq.clone(),
        h_obj: t_h,
        v_obj: t_v,
        sq_obj: t_sq.clone(),
        h_v: t_sq.clone(),
        v_h: t_sq.clone(),
        h_h: t_sq.clone(),
        h_h_inv: t_sq.clone(),
        v_v: t_sq.clone(),
        v_v_inv: t_sq,
    }
}

/// The square index of [`zoo::monoid_shell`] with the given dimensions.
fn shell_sq(nh: usize, nv: usize, g: usize, t: usize, l: usize, b: usize, r: usize, k: usize) -> SqId {
    SqId((((t * nv + l) * nh + b) * nv + r) * g + k)
}

/// Monoid data on [`zoo::monoid_shell`]: the single object acts as the
/// identity and each mixed square is the grade-zero square over its frame.
/// With commutative tables the interchangers are identity squares; with a
/// noncommutative table (e.g. [`zoo::left_zero_table`]) they are the
/// nonidentity thin squares between the two orders of composition.
pub fn shell_monoid_data(
    h_table: &[Vec<usize>],
    v_table: &[Vec<usize>],
    grades: usize,
) -> GrayMonoidData {
    let carrier = zoo::monoid_shell(h_table, v_table, grades);
    let (nh, nv, g) = (h_table.len(), v_table.len(), grades);
    let sq = |t, l, b, r| shell_sq(nh, nv, g, t, l, b, r, 0);
    GrayMonoidData {
        unit: ObjId(0),
        obj_obj: vec![vec![ObjId(0)]],
        obj_h: vec![carrier.h_ids().collect()],
        obj_v: vec![carrier.v_ids().collect()],
        obj_sq: vec![carrier.sq_ids().collect()],
        h_obj: (0..nh).map(|h| vec![HId(h)]).collect(),
        v_obj: (0..nv).map(|v| vec![VId(v)]).collect(),
        sq_obj: carrier.sq_ids().map(|s| vec![s]).collect(),
        h_v: (0..nh).map(|h| (0..nv).map(|q| sq(h, q, h, q)).collect()).collect(),
        v_h: (0..nv).map(|v| (0..nh).map(|p| sq(p, v, p, v)).collect()).collect(),
        h_h: (0..nh)
            .map(|h| (0..nh).map(|p| sq(h_table[p][h], 0, h_table[h][p], 0)).collect())
            .collect(),
        h_h_inv: (0..nh)
            .map(|h| (0..nh).map(|p| sq(h_table[h][p], 0, h_table[p][h], 0)).collect())
            .collect(),
        v_v: (0..nv)
            .map(|v| (0..nv).map(|q| sq(0, v_table[v][q], 0, v_table[q][v])).collect())
            .collect(),
        v_v_inv: (0..nv)
            .map(|v| (0..nv).map(|q| sq(0, v_table[q][v], 0, v_table[v][q])).collect())
            .collect(),
        carrier,
    }
}

/// Monoid data on two disjoint copies of the `ℤ/2 × ℤ/2` graded shell,
/// with the copies multiplying by exclusive or. The carrier is
/// `product(monoid_shell(cyclic 2, cyclic 2, 2), discrete(2))`.
pub fn doubled_shell_monoid_data() -> GrayMonoidData {
    let shell = zoo::monoid_shell(&zoo::cyclic_table(2), &zoo::cyclic_table(2), 2);
    let carrier = zoo::product(&shell, &zoo::discrete(2));
    let ns = shell.squares.len();
    // Component indices inside the product: cell `(c, j)` of copy `j` has
    // index `c*2 + j`.
    let hc = |k: usize, j: usize| HId(k * 2 + j);
    let vc = |l: usize, j: usize| VId(l * 2 + j);
    let sqc = |s: usize, j: usize| SqId(s * 2 + j);
    let sh = |t, l, b, r| shell_sq(2, 2, 2, t, l, b, r, 0).0;
    let (nh, nv) = (carrier.hcells.len(), carrier.vcells.len());
    GrayMonoidData {
        unit: ObjId(0),
        obj_obj: (0..2).map(|j| (0..2).map(|j2| ObjId(j ^ j2)).collect()).collect(),
        obj_h: (0..2)
            .map(|j2| (0..nh).map(|i| hc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        obj_v: (0..2)
            .map(|j2| (0..nv).map(|i| vc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        obj_sq: (0..2)
            .map(|j2| (0..2 * ns).map(|i| sqc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        h_obj: (0..nh)
            .map(|i| (0..2).map(|j2| hc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        v_obj: (0..nv)
            .map(|i| (0..2).map(|j2| vc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        sq_obj: (0..2 * ns)
            .map(|i| (0..2).map(|j2| sqc(i / 2, (i % 2) ^ j2)).collect())
            .collect(),
        h_v: (0..nh)
            .map(|i| {
                (0..nv)
                    .map(|i2| sqc(sh(i / 2, i2 / 2, i / 2, i2 / 2), (i % 2) ^ (i2 % 2)))
                    .collect()
            })
            .collect(),
        v_h: (0..nv)
            .map(|i| {
                (0..nh)
                    .map(|i2| sqc(sh(i2 / 2, i / 2, i2 / 2, i / 2), (i % 2) ^ (i2 % 2)))
                    .collect()
            })
            .collect(),
        h_h: (0..nh)
            .map(|i| {
                (0..nh)
                    .map(|i2| {
                        let t = (i / 2 + i2 / 2) % 2;
                        sqc(sh(t, 0, t, 0), (i % 2) ^ (i2 % 2))
                    })
                    .collect()
            })
            .collect(),
        h_h_inv: (0..nh)
            .map(|i| {
                (0..nh)
                    .map(|i2| {
                        let t = (i / 2 + i2 / 2) % 2;
                        sqc(sh(t, 0, t, 0), (i % 2) ^ (i2 % 2))
                    })
                    .collect()
            })
            .collect(),
        v_v: (0..nv)
            .map(|i| {
                (0..nv)
                    .map(|i2| {
                        let l = (i / 2 + i2 / 2) % 2;
                        sqc(sh(0, l, 0, l), (i % 2) ^ (i2 % 2))
                    })
                    .collect()
            })
            .collect(),
        v_v_inv: (0..nv)
            .map(|i| {
                (0..nv)
                    .map(|i2| {
                        let l = (i / 2 + i2 / 2) % 2;
                        sqc(sh(0, l, 0, l), (i % 2) ^ (i2 % 2))
                    })
                    .collect()
            })
            .collect(),
        carrier,
    }
}

/// Seven single-fault variants of valid monoid data, each falsifying one
/// condition family; the expected family is the first failure reported by
/// [`check_gray_monoid`]. Later families that presuppose the broken one may
/// fail too (a non-associative star also breaks the frames compared in the
/// twelve mixed equalities).
pub fn condition_mutants() -> Vec<(&'static str, GrayMonoidData)> {
    let cyc2 = zoo::cyclic_table(2);
    let mut out = Vec::new();

    // (i): remap one grade-1 square under `*∗−`; frames survive, composition
    // preservation does not.
    let mut m = shell_monoid_data(&cyc2, &cyc2, 2);
    m.obj_sq[0][shell_sq(2, 2, 2, 1, 1, 0, 0, 0).0] = shell_sq(2, 2, 2, 1, 1, 0, 0, 1);
    out.push(("(i)", m));

    // (ii): the two-element group with the non-unit declared as unit.
    let mut m = discrete_monoid_data(&cyc2, 0);
    m.unit = ObjId(1);
    out.push(("(ii)", m));

    // (iii): a non-associative magma with a two-sided unit.
    let magma = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 0]];
    out.push(("(iii)", discrete_monoid_data(&magma, 0)));

    // (iv): on the doubled shell, twist one mixed square whose two factors
    // live in different copies; the equality against the other association
    // order compares it with an untwisted entry.
    let mut m = doubled_shell_monoid_data();
    m.h_v[2][3] = SqId(shell_sq(2, 2, 2, 1, 1, 1, 1, 1).0 * 2 + 1);
    out.push(("(iv)", m));

    // (v): twist a mixed square against an identity vertical 1-cell.
    let mut m = shell_monoid_data(&cyc2, &cyc2, 2);
    m.h_v[1][0] = shell_sq(2, 2, 2, 1, 0, 1, 0, 1);
    out.push(("(v)", m));

    // (vi): with ℤ/3 vertical 1-cells, twist (h1, v1) only; additivity fails
    // against the untwisted (h1, v2) on the composite v1·v2 = v0.
    let mut m = shell_monoid_data(&cyc2, &zoo::cyclic_table(3), 2);
    m.h_v[1][1] = shell_sq(2, 3, 2, 1, 1, 1, 1, 1);
    out.push(("(vi)", m));

    // (vii): with ℤ/2 on both sides, the same twist respects additivity but
    // breaks naturality against squares with unequal left and right edges.
    let mut m = shell_monoid_data(&cyc2, &cyc2, 2);
    m.h_v[1][1] = shell_sq(2, 2, 2, 1, 1, 1, 1, 1);
    out.push(("(vii)", m));

    out
}

/// Deterministically perturb one to three entries of the square-valued
/// tables, each replaced by a different square with the same frame (when one
/// exists). Used to fuzz the checker against the cone validator.
pub fn scrambled(m: &GrayMonoidData, seed: u64) -> GrayMonoidData {
    let mut state = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).max(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut m = m.clone();
    let carrier = m.carrier.clone();
    let count = 1 + (next() % 3) as usize;
    for _ in 0..count {
        let tables: [&mut Vec<Vec<SqId>>; 8] = [
            &mut m.h_v,
            &mut m.v_h,
            &mut m.h_h,
            &mut m.h_h_inv,
            &mut m.v_v,
            &mut m.v_v_inv,
            &mut m.obj_sq,
            &mut m.sq_obj,
        ];
        let table = tables.into_iter().nth((next() % 8) as usize).unwrap();
        let row = (next() as usize) % table.len();
        let col = (next() as usize) % table[row].len();
        let old = table[row][col];
        let fr = carrier.square(old).clone();
        let candidates: Vec<SqId> = carrier
            .squares_with_frame(fr.top, fr.left, fr.bottom, fr.right)
            .into_iter()
            .filter(|&s| s != old)
            .collect();
        if !candidates.is_empty() {
            table[row][col] = candidates[(next() as usize) % candidates.len()];
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::gray::curry_cone;
    use crate::hom::build_hom;

    fn xor2() -> GrayMonoidData {
        discrete_monoid_data(&zoo::cyclic_table(2), 0)
    }

    #[test]
    fn discrete_group_data_is_a_monoid() {
        let report = check_gray_monoid(&xor2()).unwrap();
        assert!(report.ok, "{:?}", report.failures);
        let one = discrete_monoid_data(&[vec![0]], 0);
        assert!(check_gray_monoid(&one).unwrap().ok);
    }

    #[test]
    fn wrong_unit_is_reported_as_condition_ii() {
        let mut m = xor2();
        m.unit = ObjId(1);
        let report = check_gray_monoid(&m).unwrap();
        assert!(!report.ok);
        assert!(report.failures.iter().all(|f| f.law == "(ii)"), "{:?}", report.failures);
    }

    #[test]
    fn shell_data_are_monoids() {
        let cyc2 = zoo::cyclic_table(2);
        for (name, m) in [
            ("graded shell", shell_monoid_data(&cyc2, &cyc2, 2)),
            ("mixed shell", shell_monoid_data(&cyc2, &zoo::cyclic_table(3), 2)),
            ("doubled shell", doubled_shell_monoid_data()),
            ("thin noncommutative", shell_monoid_data(&zoo::left_zero_table(3), &zoo::left_zero_table(3), 1)),
        ] {
            let report = check_gray_monoid(&m).unwrap();
            assert!(report.ok, "{name}: {:?}", report.failures);
        }
    }

    #[test]
    fn thin_noncommutative_shell_has_nonidentity_interchangers() {
        let lz = zoo::left_zero_table(3);
        let m = shell_monoid_data(&lz, &lz, 1);
        let s = m.h_h[1][2];
        let fr = m.carrier.square(s).clone();
        assert_ne!(fr.top, fr.bottom);
        assert_ne!(s, m.carrier.sq_v_id(fr.top));
    }

    #[test]
    fn each_condition_mutant_names_its_family_first() {
        let mut seen = BTreeSet::new();
        for (expected, m) in condition_mutants() {
            let report = check_gray_monoid(&m).unwrap();
            assert!(!report.ok, "{expected}: mutant passed");
            assert_eq!(report.failures[0].law, expected, "{:?}", report.failures[0]);
            seen.insert(expected);
        }
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn checker_matches_cone_validator_on_fixtures_and_mutants() {
        let cyc2 = zoo::cyclic_table(2);
        assert!(agrees_with_cone_checker(&xor2()));
        assert!(agrees_with_cone_checker(&shell_monoid_data(&cyc2, &cyc2, 2)));
        assert!(agrees_with_cone_checker(&doubled_shell_monoid_data()));
        for (name, m) in condition_mutants() {
            assert!(agrees_with_cone_checker(&m), "mutant {name}");
        }
    }

    #[test]
    fn checker_matches_cone_validator_on_scrambled_data() {
        let cyc2 = zoo::cyclic_table(2);
        let bases =
            [shell_monoid_data(&cyc2, &cyc2, 2), doubled_shell_monoid_data()];
        for seed in 0..100u64 {
            let m = scrambled(&bases[(seed % 2) as usize], seed);
            assert!(agrees_with_cone_checker(&m), "seed {seed}");
        }
    }

    #[test]
    fn strict_import_round_trips_the_two_element_group() {
        let carrier = zoo::discrete(2);
        let flat: Vec<usize> = zoo::cyclic_table(2).into_iter().flatten().collect();
        let mult = DoubleFunctor {
            obj: flat.iter().map(|&z| ObjId(z)).collect(),
            h: flat.iter().map(|&z| HId(z)).collect(),
            v: flat.iter().map(|&z| VId(z)).collect(),
            sq: flat.iter().map(|&z| SqId(z)).collect(),
        };
        let m = from_strict_monoid(&carrier, &mult, ObjId(0)).unwrap();
        assert_eq!(m, xor2());
        assert!(check_gray_monoid(&m).unwrap().ok);
    }

    #[test]
    fn strict_import_rejects_the_projection() {
        let carrier = zoo::discrete(2);
        // First projection: not unital on the right.
        let flat = [0usize, 0, 1, 1];
        let mult = DoubleFunctor {
            obj: flat.iter().map(|&z| ObjId(z)).collect(),
            h: flat.iter().map(|&z| HId(z)).collect(),
            v: flat.iter().map(|&z| VId(z)).collect(),
            sq: flat.iter().map(|&z| SqId(z)).collect(),
        };
        let err = from_strict_monoid(&carrier, &mult, ObjId(0)).unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
    }

    #[test]
    fn derived_multiplication_is_strict_for_identity_interchangers() {
        let d = derived_multiplication(&xor2()).unwrap();
        assert!(d.preserves_identities);
        assert_eq!(d.h_composition_witness, None);
        assert_eq!(d.v_composition_witness, None);
        assert!(d.families_ok);
    }

    #[test]
    fn derived_multiplication_detects_nonidentity_interchangers() {
        let lz = zoo::left_zero_table(3);
        let m = shell_monoid_data(&lz, &lz, 1);
        let d = derived_multiplication(&m).unwrap();
        assert!(d.preserves_identities);
        assert!(d.h_composition_witness.is_some());
        assert!(d.v_composition_witness.is_some());
        assert!(d.families_ok);
    }

    #[test]
    fn derived_multiplication_requires_valid_data() {
        let mut m = xor2();
        m.unit = ObjId(1);
        assert!(matches!(derived_multiplication(&m), Err(Error::Input(_))));
    }

    #[test]
    fn induced_cone_curries_to_a_functor_into_the_self_hom() {
        let budget = Budget::new(10_000_000);
        for m in [xor2(), discrete_monoid_data(&[vec![0]], 0)] {
            let hom = build_hom(&m.carrier, &m.carrier, &budget).unwrap();
            let f = curry_cone(&m.induced_cone(), &hom).unwrap();
            f.validate(&m.carrier, &hom.cat).unwrap();
        }
    }

    #[test]
    fn structural_problems_are_errors_not_failures() {
        let mut m = xor2();
        m.h_v[0].pop();
        assert!(matches!(check_gray_monoid(&m), Err(Error::Structure(_))));
        let mut m = xor2();
        m.h_h[0][1] = SqId(99);
        assert!(matches!(check_gray_monoid(&m), Err(Error::Structure(_))));
        let mut m = xor2();
        m.v_h[1][0] = SqId(0);
        assert!(matches!(check_gray_monoid(&m), Err(Error::Structure(_))));
    }

    #[test]
    fn monoid_data_round_trips_through_json() {
        let m = doubled_shell_monoid_data();
        let text = serde_json::to_string(&m).unwrap();
        let back: GrayMonoidData = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);
    }
}

//! The double category of monads.
//!
//! A monad in a double category lives in its horizontal direction: a carrier
//! object with a horizontal endo-1-cell, a multiplication square and a unit
//! square, both framed by identity vertical 1-cells. Monads, their horizontal
//! and vertical morphisms, and the squares between those assemble into a
//! double category [`build_mnd`]. The construction is functorial
//! ([`mnd_functor`]), and [`chi_mnd`] builds the comparison functor from
//! monads in a hom double category to the hom between the monad double
//! categories, whose coherence is checked by [`check_chi_mnd_assoc`].

use std::collections::BTreeMap;

use crate::budget::Budget;
use crate::canonical::{compare_functors, l_functor, CheckOutcome, HomCache};
use crate::dbl::category::{FiniteDoubleCategory, HCell, HId, ObjId, SqId, Square, VCell, VId};
use crate::error::{Error, Result};
use crate::functor::DoubleFunctor;
use crate::hom::{HPseudo, HomDouble, Modification, VPseudo, hom_map};

/// A monad in a double category: a carrier object, a horizontal endo-1-cell,
/// and multiplication/unit squares framed by identity vertical 1-cells,
/// subject to the associativity and unit laws.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Monad {
    pub carrier: ObjId,
    pub endo: HId,
    pub mult: SqId,
    pub unit: SqId,
}

/// A horizontal morphism of monads `(X, x) → (Y, y)`: a horizontal 1-cell
/// `f: X → Y` together with a square `f ; y ⇒ x ; f` framed by identity
/// vertical 1-cells, compatible with the multiplications and units.
/// `src`/`tgt` index into the enclosing list of monads.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MonadHCell {
    pub src: ObjId,
    pub tgt: ObjId,
    pub arrow: HId,
    pub square: SqId,
}

/// A vertical morphism of monads `(X, x) → (Z, z)`: a vertical 1-cell
/// `g: X → Z` together with a square with frame (top `x`, left `g`, bottom
/// `z`, right `g`), compatible with the multiplications and units.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MonadVCell {
    pub src: ObjId,
    pub tgt: ObjId,
    pub arrow: VId,
    pub square: SqId,
}

/// A square of the monad double category: a square `w` of the base category
/// framed by the underlying cells of two horizontal and two vertical monad
/// morphisms, such that the two evident pastings with their structure squares
/// agree. `top`/`bottom` index monad horizontal morphisms, `left`/`right`
/// monad vertical morphisms.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MonadSquare {
    pub top: HId,
    pub left: VId,
    pub bottom: HId,
    pub right: VId,
    pub square: SqId,
}

/// The double category of monads in a base double category, together with the
/// cell data behind each index: object `i` of `cat` is `monads[i]`, and
/// likewise for the other three kinds.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MndDouble {
    pub base: FiniteDoubleCategory,
    pub cat: FiniteDoubleCategory,
    pub monads: Vec<Monad>,
    pub hcells: Vec<MonadHCell>,
    pub vcells: Vec<MonadVCell>,
    pub squares: Vec<MonadSquare>,
}

impl MndDouble {
    pub fn find_monad(&self, m: &Monad) -> Result<ObjId> {
        self.monads
            .iter()
            .position(|n| n == m)
            .map(ObjId)
            .ok_or_else(|| Error::NotFound("monad not an object of this monad category".into()))
    }
    pub fn find_hcell(&self, c: &MonadHCell) -> Result<HId> {
        self.hcells
            .iter()
            .position(|d| d == c)
            .map(HId)
            .ok_or_else(|| {
                Error::NotFound("horizontal monad morphism not a cell of this monad category".into())
            })
    }
    pub fn find_vcell(&self, c: &MonadVCell) -> Result<VId> {
        self.vcells
            .iter()
            .position(|d| d == c)
            .map(VId)
            .ok_or_else(|| {
                Error::NotFound("vertical monad morphism not a cell of this monad category".into())
            })
    }
    pub fn find_square(&self, s: &MonadSquare) -> Result<SqId> {
        self.squares
            .iter()
            .position(|t| t == s)
            .map(SqId)
            .ok_or_else(|| Error::NotFound("square not a cell of this monad category".into()))
    }
}

/// Build the double category of monads in `a` by exhaustive enumeration of
/// all four cell kinds and of their composition tables. The result validates.
pub fn build_mnd(a: &FiniteDoubleCategory, budget: &Budget) -> Result<MndDouble> {
    let mut monads = Vec::new();
    for obj in a.obj_ids() {
        let iv = a.v_id(obj);
        for x in a.h_ids() {
            let hc = a.hcell(x);
            if hc.src != obj || hc.tgt != obj {
                continue;
            }
            let xx = a.comp_h(x, x);
            let idx = a.sq_v_id(x);
            for &mult in &a.squares_with_frame(xx, iv, x, iv) {
                for &unit in &a.squares_with_frame(a.h_id(obj), iv, x, iv) {
                    budget.charge(1, "monad enumeration")?;
                    let assoc = a.paste_v(a.paste_h(mult, idx), mult)
                        == a.paste_v(a.paste_h(idx, mult), mult);
                    let unit_l = a.paste_v(a.paste_h(unit, idx), mult) == idx;
                    let unit_r = a.paste_v(a.paste_h(idx, unit), mult) == idx;
                    if assoc && unit_l && unit_r {
                        monads.push(Monad { carrier: obj, endo: x, mult, unit });
                    }
                }
            }
        }
    }

    let mut hcells = Vec::new();
    for (i, m) in monads.iter().enumerate() {
        for (j, n) in monads.iter().enumerate() {
            let idx = a.sq_v_id(m.endo);
            let idy = a.sq_v_id(n.endo);
            for f in a.h_ids() {
                let c = a.hcell(f);
                if c.src != m.carrier || c.tgt != n.carrier {
                    continue;
                }
                let idf = a.sq_v_id(f);
                let top = a.comp_h(f, n.endo);
                let bottom = a.comp_h(m.endo, f);
                for &phi in
                    &a.squares_with_frame(top, a.v_id(m.carrier), bottom, a.v_id(n.carrier))
                {
                    budget.charge(1, "monad morphism enumeration")?;
                    let mult_ok = a.paste_v(
                        a.paste_v(a.paste_h(phi, idy), a.paste_h(idx, phi)),
                        a.paste_h(m.mult, idf),
                    ) == a.paste_v(a.paste_h(idf, n.mult), phi);
                    let unit_ok =
                        a.paste_v(a.paste_h(idf, n.unit), phi) == a.paste_h(m.unit, idf);
                    if mult_ok && unit_ok {
                        hcells.push(MonadHCell {
                            src: ObjId(i),
                            tgt: ObjId(j),
                            arrow: f,
                            square: phi,
                        });
                    }
                }
            }
        }
    }

    let mut vcells = Vec::new();
    for (i, m) in monads.iter().enumerate() {
        for (j, n) in monads.iter().enumerate() {
            for g in a.v_ids() {
                let c = a.vcell(g);
                if c.src != m.carrier || c.tgt != n.carrier {
                    continue;
                }
                for &gam in &a.squares_with_frame(m.endo, g, n.endo, g) {
                    budget.charge(1, "monad morphism enumeration")?;
                    let mult_ok =
                        a.paste_v(m.mult, gam) == a.paste_v(a.paste_h(gam, gam), n.mult);
                    let unit_ok = a.paste_v(m.unit, gam) == a.paste_v(a.sq_h_id(g), n.unit);
                    if mult_ok && unit_ok {
                        vcells.push(MonadVCell {
                            src: ObjId(i),
                            tgt: ObjId(j),
                            arrow: g,
                            square: gam,
                        });
                    }
                }
            }
        }
    }

    let mut squares = Vec::new();
    for (ti, t) in hcells.iter().enumerate() {
        for (li, l) in vcells.iter().enumerate() {
            if l.src != t.src {
                continue;
            }
            for (bi, b) in hcells.iter().enumerate() {
                if b.src != l.tgt {
                    continue;
                }
                for (ri, r) in vcells.iter().enumerate() {
                    if r.src != t.tgt || r.tgt != b.tgt {
                        continue;
                    }
                    for &w in &a.squares_with_frame(t.arrow, l.arrow, b.arrow, r.arrow) {
                        budget.charge(1, "monad square enumeration")?;
                        let lhs = a.paste_v(t.square, a.paste_h(l.square, w));
                        let rhs = a.paste_v(a.paste_h(w, r.square), b.square);
                        if lhs == rhs {
                            squares.push(MonadSquare {
                                top: HId(ti),
                                left: VId(li),
                                bottom: HId(bi),
                                right: VId(ri),
                                square: w,
                            });
                        }
                    }
                }
            }
        }
    }

    let hidx = |c: &MonadHCell, law: &str| -> Result<HId> {
        hcells
            .iter()
            .position(|d| d == c)
            .map(HId)
            .ok_or_else(|| Error::structure(law))
    };
    let vidx = |c: &MonadVCell, law: &str| -> Result<VId> {
        vcells
            .iter()
            .position(|d| d == c)
            .map(VId)
            .ok_or_else(|| Error::structure(law))
    };
    let sidx = |s: &MonadSquare, law: &str| -> Result<SqId> {
        squares
            .iter()
            .position(|t| t == s)
            .map(SqId)
            .ok_or_else(|| Error::structure(law))
    };

    let mut h_comp = BTreeMap::new();
    for (i, c1) in hcells.iter().enumerate() {
        for (j, c2) in hcells.iter().enumerate() {
            if c1.tgt != c2.src {
                continue;
            }
            budget.charge(1, "monad composition tables")?;
            let arrow = a.comp_h(c1.arrow, c2.arrow);
            let square = a.paste_v(
                a.paste_h(a.sq_v_id(c1.arrow), c2.square),
                a.paste_h(c1.square, a.sq_v_id(c2.arrow)),
            );
            let k = hidx(
                &MonadHCell { src: c1.src, tgt: c2.tgt, arrow, square },
                "monads not closed under horizontal composition",
            )?;
            h_comp.insert((HId(i), HId(j)), k);
        }
    }
    let mut v_comp = BTreeMap::new();
    for (i, c1) in vcells.iter().enumerate() {
        for (j, c2) in vcells.iter().enumerate() {
            if c1.tgt != c2.src {
                continue;
            }
            budget.charge(1, "monad composition tables")?;
            let arrow = a.comp_v(c1.arrow, c2.arrow);
            let square = a.paste_v(c1.square, c2.square);
            let k = vidx(
                &MonadVCell { src: c1.src, tgt: c2.tgt, arrow, square },
                "monads not closed under vertical composition",
            )?;
            v_comp.insert((VId(i), VId(j)), k);
        }
    }
    let mut sq_h_comp = BTreeMap::new();
    let mut sq_v_comp = BTreeMap::new();
    for (i, s1) in squares.iter().enumerate() {
        for (j, s2) in squares.iter().enumerate() {
            if s1.right == s2.left {
                budget.charge(1, "monad composition tables")?;
                let k = sidx(
                    &MonadSquare {
                        top: h_comp[&(s1.top, s2.top)],
                        left: s1.left,
                        bottom: h_comp[&(s1.bottom, s2.bottom)],
                        right: s2.right,
                        square: a.paste_h(s1.square, s2.square),
                    },
                    "monad squares not closed under horizontal composition",
                )?;
                sq_h_comp.insert((SqId(i), SqId(j)), k);
            }
            if s1.bottom == s2.top {
                budget.charge(1, "monad composition tables")?;
                let k = sidx(
                    &MonadSquare {
                        top: s1.top,
                        left: v_comp[&(s1.left, s2.left)],
                        bottom: s2.bottom,
                        right: v_comp[&(s1.right, s2.right)],
                        square: a.paste_v(s1.square, s2.square),
                    },
                    "monad squares not closed under vertical composition",
                )?;
                sq_v_comp.insert((SqId(i), SqId(j)), k);
            }
        }
    }

    let mut h_id = Vec::new();
    let mut v_id = Vec::new();
    for (i, m) in monads.iter().enumerate() {
        h_id.push(hidx(
            &MonadHCell {
                src: ObjId(i),
                tgt: ObjId(i),
                arrow: a.h_id(m.carrier),
                square: a.sq_v_id(m.endo),
            },
            "identity horizontal monad morphism missing",
        )?);
        v_id.push(vidx(
            &MonadVCell {
                src: ObjId(i),
                tgt: ObjId(i),
                arrow: a.v_id(m.carrier),
                square: a.sq_v_id(m.endo),
            },
            "identity vertical monad morphism missing",
        )?);
    }
    let mut sq_v_id = Vec::new();
    for (i, c) in hcells.iter().enumerate() {
        sq_v_id.push(sidx(
            &MonadSquare {
                top: HId(i),
                left: v_id[c.src.0],
                bottom: HId(i),
                right: v_id[c.tgt.0],
                square: a.sq_v_id(c.arrow),
            },
            "vertical identity monad square missing",
        )?);
    }
    let mut sq_h_id = Vec::new();
    for (i, c) in vcells.iter().enumerate() {
        sq_h_id.push(sidx(
            &MonadSquare {
                top: h_id[c.src.0],
                left: VId(i),
                bottom: h_id[c.tgt.0],
                right: VId(i),
                square: a.sq_h_id(c.arrow),
            },
            "horizontal identity monad square missing",
        )?);
    }

    let cat = FiniteDoubleCategory {
        objects: (0..monads.len()).map(|i| format!("M{i}")).collect(),
        hcells: hcells
            .iter()
            .enumerate()
            .map(|(i, c)| HCell { name: format!("f{i}"), src: c.src, tgt: c.tgt })
            .collect(),
        vcells: vcells
            .iter()
            .enumerate()
            .map(|(i, c)| VCell { name: format!("g{i}"), src: c.src, tgt: c.tgt })
            .collect(),
        squares: squares
            .iter()
            .enumerate()
            .map(|(i, s)| Square {
                name: format!("w{i}"),
                top: s.top,
                left: s.left,
                bottom: s.bottom,
                right: s.right,
            })
            .collect(),
        h_id,
        v_id,
        sq_v_id,
        sq_h_id,
        h_comp,
        v_comp,
        sq_h_comp,
        sq_v_comp,
    }
    .validated()?;

    Ok(MndDouble { base: a.clone(), cat, monads, hcells, vcells, squares })
}

/// The componentwise action of a double functor on monads: a double functor
/// between the monad double categories of its domain and codomain.
pub fn mnd_functor(
    f: &DoubleFunctor,
    mnd_dom: &MndDouble,
    mnd_cod: &MndDouble,
) -> Result<DoubleFunctor> {
    let mut obj = Vec::new();
    for m in &mnd_dom.monads {
        obj.push(mnd_cod.find_monad(&Monad {
            carrier: f.obj[m.carrier.0],
            endo: f.h[m.endo.0],
            mult: f.sq[m.mult.0],
            unit: f.sq[m.unit.0],
        })?);
    }
    let mut h = Vec::new();
    for c in &mnd_dom.hcells {
        h.push(mnd_cod.find_hcell(&MonadHCell {
            src: obj[c.src.0],
            tgt: obj[c.tgt.0],
            arrow: f.h[c.arrow.0],
            square: f.sq[c.square.0],
        })?);
    }
    let mut v = Vec::new();
    for c in &mnd_dom.vcells {
        v.push(mnd_cod.find_vcell(&MonadVCell {
            src: obj[c.src.0],
            tgt: obj[c.tgt.0],
            arrow: f.v[c.arrow.0],
            square: f.sq[c.square.0],
        })?);
    }
    let mut sq = Vec::new();
    for s in &mnd_dom.squares {
        sq.push(mnd_cod.find_square(&MonadSquare {
            top: h[s.top.0],
            left: v[s.left.0],
            bottom: h[s.bottom.0],
            right: v[s.right.0],
            square: f.sq[s.square.0],
        })?);
    }
    DoubleFunctor { obj, h, v, sq }.validated(&mnd_dom.cat, &mnd_cod.cat)
}

/// The double functor `Mnd A → Mnd B` obtained from one monad in the hom
/// double category `⟦A, B⟧`: the carrier functor composed with the endo
/// transformation, with the induced distributive-law structure on each cell.
fn monad_image(
    hom_ab: &HomDouble,
    mnd_a: &MndDouble,
    mnd_b: &MndDouble,
    mon: &Monad,
) -> Result<DoubleFunctor> {
    let b = &mnd_b.base;
    let tf = &hom_ab.functors[mon.carrier.0];
    let t = &hom_ab.hpseudos[mon.endo.0];
    let theta = &hom_ab.mods[mon.mult.0];
    let tau = &hom_ab.mods[mon.unit.0];

    let mut obj = Vec::new();
    for m in &mnd_a.monads {
        let xo = m.carrier.0;
        let tx = t.comp_obj[xo];
        let t_endo = tf.h[m.endo.0];
        let endo = b.comp_h(tx, t_endo);
        let mult = b.paste_v(
            b.paste_h(b.sq_v_id(tx), b.paste_h(t.comp_h[m.endo.0], b.sq_v_id(t_endo))),
            b.paste_h(theta.comp[xo], tf.sq[m.mult.0]),
        );
        let unit = b.paste_h(tau.comp[xo], tf.sq[m.unit.0]);
        obj.push(mnd_b.find_monad(&Monad { carrier: tf.obj[xo], endo, mult, unit })?);
    }
    let mut h = Vec::new();
    for c in &mnd_a.hcells {
        let xo = mnd_a.monads[c.src.0].carrier.0;
        let y_endo = mnd_a.monads[c.tgt.0].endo;
        let square = b.paste_v(
            b.paste_h(t.comp_h[c.arrow.0], b.sq_v_id(tf.h[y_endo.0])),
            b.paste_h(b.sq_v_id(t.comp_obj[xo]), tf.sq[c.square.0]),
        );
        h.push(mnd_b.find_hcell(&MonadHCell {
            src: obj[c.src.0],
            tgt: obj[c.tgt.0],
            arrow: tf.h[c.arrow.0],
            square,
        })?);
    }
    let mut v = Vec::new();
    for c in &mnd_a.vcells {
        let square = b.paste_h(t.comp_v[c.arrow.0], tf.sq[c.square.0]);
        v.push(mnd_b.find_vcell(&MonadVCell {
            src: obj[c.src.0],
            tgt: obj[c.tgt.0],
            arrow: tf.v[c.arrow.0],
            square,
        })?);
    }
    let mut sq = Vec::new();
    for s in &mnd_a.squares {
        sq.push(mnd_b.find_square(&MonadSquare {
            top: h[s.top.0],
            left: v[s.left.0],
            bottom: h[s.bottom.0],
            right: v[s.right.0],
            square: tf.sq[s.square.0],
        })?);
    }
    Ok(DoubleFunctor { obj, h, v, sq })
}

/// The horizontal pseudotransformation between the images of two monads
/// induced by a horizontal monad morphism in the hom double category.
fn hcell_image(
    hom_ab: &HomDouble,
    mnd_hom: &MndDouble,
    mnd_a: &MndDouble,
    mnd_b: &MndDouble,
    hc: &MonadHCell,
    images: &[DoubleFunctor],
) -> Result<HPseudo> {
    let b = &mnd_b.base;
    let s = images[hc.src.0].clone();
    let s2 = images[hc.tgt.0].clone();
    let p = &hom_ab.hpseudos[hc.arrow.0];
    let pi = &hom_ab.mods[hc.square.0];
    let t = &hom_ab.hpseudos[mnd_hom.monads[hc.src.0].endo.0];
    let t2f = &hom_ab.functors[mnd_hom.monads[hc.tgt.0].carrier.0];

    let mut comp_obj = Vec::new();
    for (i, m) in mnd_a.monads.iter().enumerate() {
        let xo = m.carrier.0;
        let square = b.paste_v(
            b.paste_h(pi.comp[xo], b.sq_v_id(t2f.h[m.endo.0])),
            b.paste_h(b.sq_v_id(t.comp_obj[xo]), p.comp_h_inv[m.endo.0]),
        );
        comp_obj.push(mnd_b.find_hcell(&MonadHCell {
            src: s.obj[i],
            tgt: s2.obj[i],
            arrow: p.comp_obj[xo],
            square,
        })?);
    }
    let mut comp_v = Vec::new();
    for (gi, c) in mnd_a.vcells.iter().enumerate() {
        comp_v.push(mnd_b.find_square(&MonadSquare {
            top: comp_obj[c.src.0],
            left: s.v[gi],
            bottom: comp_obj[c.tgt.0],
            right: s2.v[gi],
            square: p.comp_v[c.arrow.0],
        })?);
    }
    let mut comp_h = Vec::new();
    let mut comp_h_inv = Vec::new();
    for (hi, c) in mnd_a.hcells.iter().enumerate() {
        let top = mnd_b.cat.comp_h(s.h[hi], comp_obj[c.tgt.0]);
        let bottom = mnd_b.cat.comp_h(comp_obj[c.src.0], s2.h[hi]);
        let left = mnd_b.cat.v_id(s.obj[c.src.0]);
        let right = mnd_b.cat.v_id(s2.obj[c.tgt.0]);
        comp_h.push(mnd_b.find_square(&MonadSquare {
            top,
            left,
            bottom,
            right,
            square: p.comp_h[c.arrow.0],
        })?);
        comp_h_inv.push(mnd_b.find_square(&MonadSquare {
            top: bottom,
            left,
            bottom: top,
            right,
            square: p.comp_h_inv[c.arrow.0],
        })?);
    }
    Ok(HPseudo { source: s, target: s2, comp_obj, comp_v, comp_h, comp_h_inv })
}

/// The vertical pseudotransformation between the images of two monads induced
/// by a vertical monad morphism in the hom double category.
fn vcell_image(
    hom_ab: &HomDouble,
    mnd_a: &MndDouble,
    mnd_b: &MndDouble,
    vc: &MonadVCell,
    images: &[DoubleFunctor],
) -> Result<VPseudo> {
    let b = &mnd_b.base;
    let s = images[vc.src.0].clone();
    let s2 = images[vc.tgt.0].clone();
    let r = &hom_ab.vpseudos[vc.arrow.0];
    let rho = &hom_ab.mods[vc.square.0];

    let mut comp_obj = Vec::new();
    for (i, m) in mnd_a.monads.iter().enumerate() {
        let xo = m.carrier.0;
        let square = b.paste_h(rho.comp[xo], r.comp_h[m.endo.0]);
        comp_obj.push(mnd_b.find_vcell(&MonadVCell {
            src: s.obj[i],
            tgt: s2.obj[i],
            arrow: r.comp_obj[xo],
            square,
        })?);
    }
    let mut comp_h = Vec::new();
    for (hi, c) in mnd_a.hcells.iter().enumerate() {
        comp_h.push(mnd_b.find_square(&MonadSquare {
            top: s.h[hi],
            left: comp_obj[c.src.0],
            bottom: s2.h[hi],
            right: comp_obj[c.tgt.0],
            square: r.comp_h[c.arrow.0],
        })?);
    }
    let mut comp_v = Vec::new();
    let mut comp_v_inv = Vec::new();
    for (gi, c) in mnd_a.vcells.iter().enumerate() {
        let top = mnd_b.cat.h_id(s.obj[c.src.0]);
        let bottom = mnd_b.cat.h_id(s2.obj[c.tgt.0]);
        let left = mnd_b.cat.comp_v(comp_obj[c.src.0], s2.v[gi]);
        let right = mnd_b.cat.comp_v(s.v[gi], comp_obj[c.tgt.0]);
        comp_v.push(mnd_b.find_square(&MonadSquare {
            top,
            left,
            bottom,
            right,
            square: r.comp_v[c.arrow.0],
        })?);
        comp_v_inv.push(mnd_b.find_square(&MonadSquare {
            top,
            left: right,
            bottom,
            right: left,
            square: r.comp_v_inv[c.arrow.0],
        })?);
    }
    Ok(VPseudo { source: s, target: s2, comp_obj, comp_h, comp_v, comp_v_inv })
}

/// The comparison functor `Mnd ⟦A, B⟧ → ⟦Mnd A, Mnd B⟧` over prebuilt parts.
/// Index consistency requires that all four categories were built by the
/// deterministic constructors of this crate.
pub fn chi_mnd_core(
    hom_ab: &HomDouble,
    mnd_hom: &MndDouble,
    mnd_a: &MndDouble,
    mnd_b: &MndDouble,
    hom_mnd: &HomDouble,
) -> Result<DoubleFunctor> {
    let images: Vec<DoubleFunctor> = mnd_hom
        .monads
        .iter()
        .map(|m| monad_image(hom_ab, mnd_a, mnd_b, m))
        .collect::<Result<_>>()?;
    let h_images: Vec<HPseudo> = mnd_hom
        .hcells
        .iter()
        .map(|c| hcell_image(hom_ab, mnd_hom, mnd_a, mnd_b, c, &images))
        .collect::<Result<_>>()?;
    let v_images: Vec<VPseudo> = mnd_hom
        .vcells
        .iter()
        .map(|c| vcell_image(hom_ab, mnd_a, mnd_b, c, &images))
        .collect::<Result<_>>()?;

    let obj = images
        .iter()
        .map(|f| hom_mnd.find_functor(f))
        .collect::<Result<_>>()?;
    let h = h_images
        .iter()
        .map(|x| hom_mnd.find_hpseudo(x))
        .collect::<Result<_>>()?;
    let v = v_images
        .iter()
        .map(|y| hom_mnd.find_vpseudo(y))
        .collect::<Result<_>>()?;
    let mut sq = Vec::new();
    for s in &mnd_hom.squares {
        let omega = &hom_ab.mods[s.square.0];
        let comp = mnd_a
            .monads
            .iter()
            .enumerate()
            .map(|(i, m)| {
                mnd_b.find_square(&MonadSquare {
                    top: h_images[s.top.0].comp_obj[i],
                    left: v_images[s.left.0].comp_obj[i],
                    bottom: h_images[s.bottom.0].comp_obj[i],
                    right: v_images[s.right.0].comp_obj[i],
                    square: omega.comp[m.carrier.0],
                })
            })
            .collect::<Result<_>>()?;
        sq.push(hom_mnd.find_mod(&Modification {
            top: h_images[s.top.0].clone(),
            left: v_images[s.left.0].clone(),
            bottom: h_images[s.bottom.0].clone(),
            right: v_images[s.right.0].clone(),
            comp,
        })?);
    }
    Ok(DoubleFunctor { obj, h, v, sq })
}

/// The comparison functor for monads together with everything built on the
/// way: the hom `⟦A, B⟧`, the monad categories of `A`, `B` and of the hom,
/// and the hom `⟦Mnd A, Mnd B⟧` the functor lands in.
pub struct ChiMnd {
    pub functor: DoubleFunctor,
    pub hom_ab: HomDouble,
    pub mnd_hom: MndDouble,
    pub mnd_a: MndDouble,
    pub mnd_b: MndDouble,
    pub hom_mnd: HomDouble,
}

/// Build and validate the comparison functor `Mnd ⟦A, B⟧ → ⟦Mnd A, Mnd B⟧`.
pub fn chi_mnd(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<ChiMnd> {
    let hom_ab = crate::hom::build_hom(a, b, budget)?;
    let mnd_hom = build_mnd(&hom_ab.cat, budget)?;
    let mnd_a = build_mnd(a, budget)?;
    let mnd_b = build_mnd(b, budget)?;
    let hom_mnd = crate::hom::build_hom(&mnd_a.cat, &mnd_b.cat, budget)?;
    let functor = chi_mnd_core(&hom_ab, &mnd_hom, &mnd_a, &mnd_b, &hom_mnd)?
        .validated(&mnd_hom.cat, &hom_mnd.cat)?;
    Ok(ChiMnd { functor, hom_ab, mnd_hom, mnd_a, mnd_b, hom_mnd })
}

/// The associativity condition for the monads comparison: both composites
/// `Mnd ⟦A, B⟧ → ⟦Mnd ⟦C, A⟧, ⟦Mnd C, Mnd B⟧⟧` must agree — restriction along
/// the comparison after the canonical hom-functor action, against the
/// comparison of the outer homs after the monad image of that action.
pub fn check_chi_mnd_assoc(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let mut cache = HomCache::new();
    let hom_ab = cache.hom(a, b, budget)?;
    let hom_ca = cache.hom(c, a, budget)?;
    let hom_cb = cache.hom(c, b, budget)?;

    let mnd_a = build_mnd(a, budget)?;
    let mnd_b = build_mnd(b, budget)?;
    let mnd_c = build_mnd(c, budget)?;
    let mnd_hom_ab = build_mnd(&hom_ab.cat, budget)?;
    let mnd_hom_ca = build_mnd(&hom_ca.cat, budget)?;
    let mnd_hom_cb = build_mnd(&hom_cb.cat, budget)?;

    let hom_mnd_ab = cache.hom(&mnd_a.cat.clone(), &mnd_b.cat.clone(), budget)?;
    let hom_mnd_ca = cache.hom(&mnd_c.cat.clone(), &mnd_a.cat.clone(), budget)?;
    let hom_mnd_cb = cache.hom(&mnd_c.cat.clone(), &mnd_b.cat.clone(), budget)?;

    let chi_ab = chi_mnd_core(&hom_ab, &mnd_hom_ab, &mnd_a, &mnd_b, &hom_mnd_ab)?;
    let chi_ca = chi_mnd_core(&hom_ca, &mnd_hom_ca, &mnd_c, &mnd_a, &hom_mnd_ca)?;
    let chi_cb = chi_mnd_core(&hom_cb, &mnd_hom_cb, &mnd_c, &mnd_b, &hom_mnd_cb)?;

    // ⟦Mnd ⟦C, A⟧, ⟦Mnd C, Mnd B⟧⟧, the common codomain.
    let final_cod = cache.hom(&mnd_hom_ca.cat.clone(), &hom_mnd_cb.cat.clone(), budget)?;

    // Path 1: the comparison on (A, B), then the canonical hom action of the
    // monad categories, then restriction along the comparison on (C, A).
    let l_mnd = l_functor(&mut cache, &mnd_c.cat, &mnd_a.cat, &mnd_b.cat, budget)?;
    let outer_mnd = cache.hom(&hom_mnd_ca.cat.clone(), &hom_mnd_cb.cat.clone(), budget)?;
    let hm1 = hom_map(
        &chi_ca,
        &DoubleFunctor::identity(&hom_mnd_cb.cat),
        &mnd_hom_ca.cat,
        &outer_mnd,
        &final_cod,
    )?;
    let path1 = hm1.after(&l_mnd).after(&chi_ab);

    // Path 2: the monad image of the canonical hom action on the bases, then
    // the comparison of the outer homs, then postcomposition with the
    // comparison on (C, B).
    let l_dbl = l_functor(&mut cache, c, a, b, budget)?;
    let outer = cache.hom(&hom_ca.cat.clone(), &hom_cb.cat.clone(), budget)?;
    let mnd_outer = build_mnd(&outer.cat, budget)?;
    let mnd_l = mnd_functor(&l_dbl, &mnd_hom_ab, &mnd_outer)?;
    let hom_mnd_big = cache.hom(&mnd_hom_ca.cat.clone(), &mnd_hom_cb.cat.clone(), budget)?;
    let chi_big = chi_mnd_core(&outer, &mnd_outer, &mnd_hom_ca, &mnd_hom_cb, &hom_mnd_big)?;
    let hm2 = hom_map(
        &DoubleFunctor::identity(&mnd_hom_ca.cat),
        &chi_cb,
        &mnd_hom_ca.cat,
        &hom_mnd_big,
        &final_cod,
    )?;
    let path2 = hm2.after(&chi_big).after(&mnd_l);

    Ok(compare_functors(&path1, &path2, "associativity of the monads comparison"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::iso::is_isomorphic;
    use crate::dbl::zoo;
    use crate::functor::enumerate_functors;
    use crate::two::{quintet, terminal2};

    fn big() -> Budget {
        Budget::new(1_000_000_000)
    }

    fn is_permutation(indices: impl ExactSizeIterator<Item = usize>, n: usize) -> bool {
        let mut seen: Vec<usize> = indices.collect();
        seen.sort_unstable();
        seen == (0..n).collect::<Vec<_>>()
    }

    #[test]
    fn monads_in_the_terminal_category_form_the_terminal_category() {
        let m = build_mnd(&zoo::terminal(), &big()).unwrap();
        assert!(is_isomorphic(&m.cat, &zoo::terminal()));
    }

    #[test]
    fn monads_in_the_free_arrow_are_the_identity_monads() {
        let m = build_mnd(&zoo::free_arrow_h(), &big()).unwrap();
        assert_eq!(m.cat.objects.len(), 2);
        assert!(is_isomorphic(&m.cat, &zoo::free_arrow_h()));
    }

    #[test]
    fn monads_in_the_square_category_of_the_terminal_are_trivial() {
        let m = build_mnd(&quintet(&terminal2()).cat, &big()).unwrap();
        assert!(is_isomorphic(&m.cat, &zoo::terminal()));
    }

    #[test]
    fn monads_in_the_generator_category_validate() {
        let m = build_mnd(&zoo::generator(), &big()).unwrap();
        assert!(!m.monads.is_empty());
    }

    #[test]
    fn the_monad_construction_is_functorial() {
        let a = zoo::free_arrow_h();
        let mnd_a = build_mnd(&a, &big()).unwrap();
        let id = DoubleFunctor::identity(&a);
        assert_eq!(
            mnd_functor(&id, &mnd_a, &mnd_a).unwrap(),
            DoubleFunctor::identity(&mnd_a.cat)
        );
        let endos = enumerate_functors(&a, &a, &big()).unwrap();
        for f in &endos {
            let mf = mnd_functor(f, &mnd_a, &mnd_a).unwrap();
            for g in &endos {
                let mg = mnd_functor(g, &mnd_a, &mnd_a).unwrap();
                let composite = mnd_functor(&g.after(f), &mnd_a, &mnd_a).unwrap();
                assert_eq!(composite, mg.after(&mf));
            }
        }
    }

    #[test]
    fn the_monad_construction_collapses_constant_functors() {
        let a = zoo::free_arrow_h();
        let unit = zoo::terminal();
        let mnd_a = build_mnd(&a, &big()).unwrap();
        let mnd_unit = build_mnd(&unit, &big()).unwrap();
        let collapse = enumerate_functors(&a, &unit, &big()).unwrap().remove(0);
        let image = mnd_functor(&collapse, &mnd_a, &mnd_unit).unwrap();
        assert!(image.obj.iter().all(|&o| o == ObjId(0)));
    }

    #[test]
    fn monads_in_a_hom_category_validate() {
        let a = zoo::free_arrow_h();
        let hom = crate::hom::build_hom(&a, &a, &big()).unwrap();
        let m = build_mnd(&hom.cat, &big()).unwrap();
        // At least the identity monad on each of the three functors.
        assert!(m.monads.len() >= 3);
    }

    #[test]
    fn the_comparison_collapses_over_the_terminal_category() {
        let chi = chi_mnd(&zoo::terminal(), &zoo::free_arrow_h(), &big()).unwrap();
        let f = &chi.functor;
        assert!(is_permutation(f.obj.iter().map(|o| o.0), chi.hom_mnd.functors.len()));
        assert!(is_permutation(f.h.iter().map(|h| h.0), chi.hom_mnd.hpseudos.len()));
        assert!(is_permutation(f.v.iter().map(|v| v.0), chi.hom_mnd.vpseudos.len()));
        assert!(is_permutation(f.sq.iter().map(|s| s.0), chi.hom_mnd.mods.len()));
    }

    #[test]
    fn the_comparison_validates_on_the_free_arrow_pair() {
        let a = zoo::free_arrow_h();
        let chi = chi_mnd(&a, &a, &big()).unwrap();
        assert_eq!(chi.functor.obj.len(), chi.mnd_hom.monads.len());
    }

    #[test]
    fn the_comparison_is_associative() {
        let outcome = check_chi_mnd_assoc(
            &zoo::terminal(),
            &zoo::free_arrow_h(),
            &zoo::terminal(),
            &big(),
        )
        .unwrap();
        assert!(outcome.ok, "{:?}", outcome.witness);
    }
}

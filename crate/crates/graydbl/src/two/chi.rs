//! The monoidality comparison functors between the double-category and
//! 2-category worlds, and their coherence checks.
//!
//! * [`chi_h`]: `χ_{A,B}: H⟦A,B⟧ → [H A, H B]` — the horizontal 2-category
//!   functor is monoidal; a horizontal pseudotransformation forgets its
//!   naturality data at vertical 1-cells and becomes pseudonatural.
//! * [`chi_v`]: the vertical analogue, via the transpose.
//! * [`chi_sqr`]: `Sqr[A,B] → ⟦Sqr A, Sqr B⟧` — the quintet construction is
//!   monoidal; a pseudonatural transformation becomes a horizontal (and a
//!   vertical) pseudotransformation whose components are quintets filled by
//!   its structure 2-cells and their inverses.
//!
//! The checks at the bottom instantiate the unit and associativity
//! compatibility conditions for a monoidal functor, with both sides expressed
//! through the evaluation functor `ℓ` so that no tensor product has to be
//! realized: associativity compares
//! `[χ, 1] ∘ ℓ ∘ χ` against `[1, χ] ∘ χ ∘ (image of ℓ)`, and unitality
//! checks that `χ` preserves the identity point and commutes with the
//! collapse of a hom out of the unit.

use crate::budget::Budget;
use crate::canonical::{compare_functors, l_functor, CheckOutcome, HomCache};
use crate::dbl::category::{FiniteDoubleCategory, HId, SqId, VId};
use crate::dbl::zoo;
use crate::error::Result;
use crate::functor::DoubleFunctor;
use crate::hom::{build_hom, hom_map, identity_vpseudo, HPseudo, HomDouble, Modification, VPseudo};
use crate::two::hom2::{h_of_functor, two_hom_map, unit_elim2, unit_intro2, Hom2, TwoFunctor};
use crate::two::l2::l2_core;
use crate::two::{
    embed, horizontal_two_category, quintet, Finite2Category, Horizontal2, OneId, Quintet, TwoId,
};

/// Compare two 2-functors with the same domain and codomain.
pub fn compare_two_functors(lhs: &TwoFunctor, rhs: &TwoFunctor, label: &str) -> CheckOutcome {
    compare_functors(&lhs.to_double(), &rhs.to_double(), label)
}

// ---------------------------------------------------------------------------
// χ for the horizontal (and vertical) 2-category functor
// ---------------------------------------------------------------------------

/// `χ_{A,B}: H⟦A,B⟧ → [H A, H B]` with everything it was built from.
pub struct ChiH {
    pub functor: TwoFunctor,
    pub hom_ab: Hom2,
    pub h_a: Horizontal2,
    pub h_b: Horizontal2,
    pub hom2: Hom2,
}

/// Build `χ_{A,B}` from prebuilt homs: `hom_ab` over the double categories
/// `A, B` themselves, and `hom2` the hom 2-category of their horizontal
/// 2-categories.
pub fn chi_h_core(
    hom_ab: &Hom2,
    h_a: &Horizontal2,
    h_b: &Horizontal2,
    hom2: &Hom2,
) -> Result<TwoFunctor> {
    let a = &hom_ab.dom;
    let d_hb = &hom2.cod;

    let lift_f = |f: &DoubleFunctor| -> Result<DoubleFunctor> {
        Ok(h_of_functor(f, h_a, h_b)?.to_double())
    };
    let lift_sq = |s: SqId| -> Result<SqId> { Ok(SqId(h_b.require_two(s)?.0)) };
    let lift_x = |x: &HPseudo| -> Result<HPseudo> {
        let mut comp_h = Vec::new();
        let mut comp_h_inv = Vec::new();
        for h in a.h_ids() {
            comp_h.push(lift_sq(x.comp_h[h.0])?);
            comp_h_inv.push(lift_sq(x.comp_h_inv[h.0])?);
        }
        Ok(HPseudo {
            source: lift_f(&x.source)?,
            target: lift_f(&x.target)?,
            comp_obj: x.comp_obj.clone(),
            comp_v: x.comp_obj.iter().map(|&h| d_hb.sq_v_id(h)).collect(),
            comp_h,
            comp_h_inv,
        })
    };

    let mut obj = Vec::new();
    for f in &hom_ab.inner.functors {
        obj.push(hom2.inner.find_functor(&lift_f(f)?)?);
    }
    let mut one = Vec::new();
    for x in &hom_ab.inner.hpseudos {
        one.push(OneId(hom2.inner.find_hpseudo(&lift_x(x)?)?.0));
    }
    let mut two = Vec::new();
    for t in hom_ab.cat().two_ids() {
        let m = hom_ab.mod_of_two(t);
        let top = lift_x(&m.top)?;
        let left = identity_vpseudo(&hom2.dom, d_hb, &top.source);
        let right = identity_vpseudo(&hom2.dom, d_hb, &top.target);
        let mut comp = Vec::new();
        for x in a.obj_ids() {
            comp.push(lift_sq(m.comp[x.0])?);
        }
        let image = Modification { top, left, bottom: lift_x(&m.bottom)?, right, comp };
        two.push(hom2.two_of_sq(hom2.inner.find_mod(&image)?)?);
    }
    Ok(TwoFunctor { obj, one, two })
}

/// Build and validate `χ_{A,B}: H⟦A,B⟧ → [H A, H B]`.
pub fn chi_h(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory, budget: &Budget) -> Result<ChiH> {
    let h_a = horizontal_two_category(a);
    let h_b = horizontal_two_category(b);
    let hom_ab = Hom2::build(a, b, budget)?;
    let hom2 = Hom2::build2(&h_a.cat, &h_b.cat, budget)?;
    let functor = chi_h_core(&hom_ab, &h_a, &h_b, &hom2)?.validated(hom_ab.cat(), hom2.cat())?;
    Ok(ChiH { functor, hom_ab, h_a, h_b, hom2 })
}

/// `χ_{A,B}: V⟦A,B⟧ → [V A, V B]`: the vertical 2-category of a double
/// category is the horizontal one of its transpose, and the hom of the
/// transposes is the transpose of the hom, so the vertical comparison is the
/// horizontal one applied to the transposed inputs.
pub fn chi_v(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory, budget: &Budget) -> Result<ChiH> {
    chi_h(&zoo::transpose(a), &zoo::transpose(b), budget)
}

// ---------------------------------------------------------------------------
// χ for the quintet construction
// ---------------------------------------------------------------------------

/// `χ_{A,B}: Sqr[A,B] → ⟦Sqr A, Sqr B⟧` with everything it was built from.
pub struct ChiSqr {
    pub functor: DoubleFunctor,
    pub hom2_ab: Hom2,
    pub q_dom: Quintet,
    pub q_a: Quintet,
    pub q_b: Quintet,
    pub hom_s: HomDouble,
}

/// The quintet construction on a 2-functor.
pub fn sqr_of_two_functor(
    f: &TwoFunctor,
    q_dom: &Quintet,
    q_cod: &Quintet,
) -> Result<DoubleFunctor> {
    let mut sq = Vec::new();
    for s in q_dom.cat.sq_ids() {
        let sqd = q_dom.cat.square(s);
        let phi = q_dom.filler[s.0];
        sq.push(q_cod.find(
            HId(f.one[sqd.top.0].0),
            VId(f.one[sqd.left.0].0),
            HId(f.one[sqd.bottom.0].0),
            VId(f.one[sqd.right.0].0),
            f.two[phi.0],
        )?);
    }
    Ok(DoubleFunctor {
        obj: f.obj.clone(),
        h: f.one.iter().map(|c| HId(c.0)).collect(),
        v: f.one.iter().map(|c| VId(c.0)).collect(),
        sq,
    })
}

/// Build `χ_{A,B}` for the quintet construction from prebuilt parts:
/// `hom2_ab = [A,B]`, `q_dom = Sqr[A,B]`, `q_a/q_b` the quintets of the
/// arguments, and `hom_s = ⟦Sqr A, Sqr B⟧`.
pub fn chi_sqr_core(
    hom2_ab: &Hom2,
    q_dom: &Quintet,
    q_a: &Quintet,
    q_b: &Quintet,
    hom_s: &HomDouble,
) -> Result<DoubleFunctor> {
    let qb = &q_b.cat;

    // Sqr on a double functor between embeddings (a 2-functor).
    let sqr_f = |f: &DoubleFunctor| -> Result<DoubleFunctor> {
        sqr_of_two_functor(&TwoFunctor::from_double(f), q_a, q_b)
    };

    // A pseudonatural transformation as a horizontal pseudotransformation:
    // the component at a vertical 1-cell f is the quintet filled by the
    // inverse structure 2-cell, and at a horizontal 1-cell the quintet filled
    // by the structure 2-cell itself.
    let lift_h = |p: &HPseudo| -> Result<HPseudo> {
        let source = sqr_f(&p.source)?;
        let target = sqr_f(&p.target)?;
        let comp_obj: Vec<HId> = p.comp_obj.clone();
        let mut comp_v = Vec::new();
        let mut comp_h = Vec::new();
        let mut comp_h_inv = Vec::new();
        for (i, x) in q_a.cat.vcells.iter().enumerate() {
            comp_v.push(q_b.find(
                p.comp_obj[x.src.0],
                VId(p.source.h[i].0),
                p.comp_obj[x.tgt.0],
                VId(p.target.h[i].0),
                TwoId(p.comp_h_inv[i].0),
            )?);
        }
        for (i, x) in q_a.cat.hcells.iter().enumerate() {
            let top = qb.comp_h(p.source.h[i], p.comp_obj[x.tgt.0]);
            let bottom = qb.comp_h(p.comp_obj[x.src.0], p.target.h[i]);
            let left = qb.v_id(p.source.obj[x.src.0]);
            let right = qb.v_id(p.target.obj[x.tgt.0]);
            comp_h.push(q_b.find(top, left, bottom, right, TwoId(p.comp_h[i].0))?);
            comp_h_inv.push(q_b.find(bottom, left, top, right, TwoId(p.comp_h_inv[i].0))?);
        }
        Ok(HPseudo { source, target, comp_obj, comp_v, comp_h, comp_h_inv })
    };

    // The same transformation as a vertical pseudotransformation.
    let lift_v = |p: &HPseudo| -> Result<VPseudo> {
        let source = sqr_f(&p.source)?;
        let target = sqr_f(&p.target)?;
        let comp_obj: Vec<VId> = p.comp_obj.iter().map(|h| VId(h.0)).collect();
        let mut comp_h = Vec::new();
        let mut comp_v = Vec::new();
        let mut comp_v_inv = Vec::new();
        for (i, x) in q_a.cat.hcells.iter().enumerate() {
            comp_h.push(q_b.find(
                p.source.h[i],
                VId(p.comp_obj[x.src.0].0),
                p.target.h[i],
                VId(p.comp_obj[x.tgt.0].0),
                TwoId(p.comp_h[i].0),
            )?);
        }
        for (i, x) in q_a.cat.vcells.iter().enumerate() {
            let top = qb.h_id(p.source.obj[x.src.0]);
            let bottom = qb.h_id(p.target.obj[x.tgt.0]);
            let left = qb.comp_v(VId(p.comp_obj[x.src.0].0), VId(p.target.h[i].0));
            let right = qb.comp_v(VId(p.source.h[i].0), VId(p.comp_obj[x.tgt.0].0));
            comp_v.push(q_b.find(top, left, bottom, right, TwoId(p.comp_h[i].0))?);
            comp_v_inv.push(q_b.find(top, right, bottom, left, TwoId(p.comp_h_inv[i].0))?);
        }
        Ok(VPseudo { source, target, comp_obj, comp_h, comp_v, comp_v_inv })
    };

    let mut obj = Vec::new();
    for f in &hom2_ab.inner.functors {
        obj.push(hom_s.find_functor(&sqr_f(f)?)?);
    }
    let mut h = Vec::new();
    let mut v = Vec::new();
    for p in &hom2_ab.inner.hpseudos {
        h.push(hom_s.find_hpseudo(&lift_h(p)?)?);
        v.push(hom_s.find_vpseudo(&lift_v(p)?)?);
    }
    let mut sq = Vec::new();
    for s in q_dom.cat.sq_ids() {
        let sqd = q_dom.cat.square(s);
        let p = &hom2_ab.inner.hpseudos[sqd.top.0];
        let q = &hom2_ab.inner.hpseudos[sqd.left.0];
        let bt = &hom2_ab.inner.hpseudos[sqd.bottom.0];
        let r = &hom2_ab.inner.hpseudos[sqd.right.0];
        let m = hom2_ab.mod_of_two(q_dom.filler[s.0]);
        let mut comp = Vec::new();
        for x in hom2_ab.dom.obj_ids() {
            comp.push(q_b.find(
                p.comp_obj[x.0],
                VId(q.comp_obj[x.0].0),
                bt.comp_obj[x.0],
                VId(r.comp_obj[x.0].0),
                TwoId(m.comp[x.0].0),
            )?);
        }
        let image = Modification {
            top: lift_h(p)?,
            left: lift_v(q)?,
            bottom: lift_h(bt)?,
            right: lift_v(r)?,
            comp,
        };
        sq.push(hom_s.find_mod(&image)?);
    }
    Ok(DoubleFunctor { obj, h, v, sq })
}

/// Build and validate `χ_{A,B}: Sqr[A,B] → ⟦Sqr A, Sqr B⟧`.
pub fn chi_sqr(a: &Finite2Category, b: &Finite2Category, budget: &Budget) -> Result<ChiSqr> {
    let q_a = quintet(a);
    let q_b = quintet(b);
    let hom2_ab = Hom2::build2(a, b, budget)?;
    let q_dom = quintet(hom2_ab.cat());
    let hom_s = build_hom(&q_a.cat, &q_b.cat, budget)?;
    let functor = chi_sqr_core(&hom2_ab, &q_dom, &q_a, &q_b, &hom_s)?
        .validated(&q_dom.cat, &hom_s.cat)?;
    Ok(ChiSqr { functor, hom2_ab, q_dom, q_a, q_b, hom_s })
}

// ---------------------------------------------------------------------------
// Associativity of χ
// ---------------------------------------------------------------------------

/// The associativity condition for `χ_H`, expressed through `ℓ`: both
/// composites `H⟦A,B⟧ → [H⟦C,A⟧, [H C, H B]]` must agree —
/// `[χ_{C,A}, 1] ∘ ℓ^{HC} ∘ χ_{A,B}` and
/// `[1, χ_{C,B}] ∘ χ_{⟦C,A⟧,⟦C,B⟧} ∘ H(ℓ^C)`.
pub fn check_chi_h_assoc(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let h_a = horizontal_two_category(a);
    let h_b = horizontal_two_category(b);
    let h_c = horizontal_two_category(c);
    let hom_ab = Hom2::build(a, b, budget)?;
    let hom_ca = Hom2::build(c, a, budget)?;
    let hom_cb = Hom2::build(c, b, budget)?;
    let hom2_ha_hb = Hom2::build2(&h_a.cat, &h_b.cat, budget)?;
    let hom2_hc_ha = Hom2::build2(&h_c.cat, &h_a.cat, budget)?;
    let hom2_hc_hb = Hom2::build2(&h_c.cat, &h_b.cat, budget)?;

    let chi_ab = chi_h_core(&hom_ab, &h_a, &h_b, &hom2_ha_hb)?;
    let chi_ca = chi_h_core(&hom_ca, &h_c, &h_a, &hom2_hc_ha)?;
    let chi_cb = chi_h_core(&hom_cb, &h_c, &h_b, &hom2_hc_hb)?;

    // [H⟦C,A⟧, [HC,HB]], the common codomain.
    let final_cod = Hom2::build2(hom_ca.cat(), hom2_hc_hb.cat(), budget)?;

    // Path 1: χ, then ℓ at the 2-category level, then restriction along χ_{C,A}.
    let outer_l2 = Hom2::build2(hom2_hc_ha.cat(), hom2_hc_hb.cat(), budget)?;
    let l2f = l2_core(&hom2_ha_hb, &hom2_hc_ha, &hom2_hc_hb, &outer_l2)?;
    let hm1 = two_hom_map(
        &chi_ca.to_double(),
        &DoubleFunctor::identity(&outer_l2.cod),
        &outer_l2,
        &final_cod,
    )?;
    let path1 = hm1.after(&l2f).after(&chi_ab);

    // Path 2: ℓ at the double-category level, restricted to horizontal parts,
    // then χ of the double homs, then postcomposition with χ_{C,B}.
    let hom_outer = Hom2::build(&hom_ca.inner.cat, &hom_cb.inner.cat, budget)?;
    let mut cache = HomCache::new();
    let l_dbl = l_functor(&mut cache, c, a, b, budget)?;
    let hl = h_of_functor(&l_dbl, &hom_ab.h2, &hom_outer.h2)?;
    let hom2_big = Hom2::build2(hom_ca.cat(), hom_cb.cat(), budget)?;
    let chi_big = chi_h_core(&hom_outer, &hom_ca.h2, &hom_cb.h2, &hom2_big)?;
    let hm2 = two_hom_map(
        &DoubleFunctor::identity(&hom2_big.dom),
        &chi_cb.to_double(),
        &hom2_big,
        &final_cod,
    )?;
    let path2 = hm2.after(&chi_big).after(&hl);

    Ok(compare_two_functors(&path1, &path2, "associativity of the horizontal comparison"))
}

/// The associativity condition for `χ_Sqr`, the double-category mirror of
/// [`check_chi_h_assoc`]: both composites
/// `Sqr[A,B] → ⟦Sqr[C,A], ⟦Sqr C, Sqr B⟧⟧` must agree.
pub fn check_chi_sqr_assoc(
    a: &Finite2Category,
    b: &Finite2Category,
    c: &Finite2Category,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let q_a = quintet(a);
    let q_b = quintet(b);
    let q_c = quintet(c);
    let hom2_ab = Hom2::build2(a, b, budget)?;
    let hom2_ca = Hom2::build2(c, a, budget)?;
    let hom2_cb = Hom2::build2(c, b, budget)?;
    let q_ab = quintet(hom2_ab.cat());
    let q_ca = quintet(hom2_ca.cat());
    let q_cb = quintet(hom2_cb.cat());

    let hom_s_ab = build_hom(&q_a.cat, &q_b.cat, budget)?;
    let hom_s_ca = build_hom(&q_c.cat, &q_a.cat, budget)?;
    let hom_s_cb = build_hom(&q_c.cat, &q_b.cat, budget)?;
    let chi_ab = chi_sqr_core(&hom2_ab, &q_ab, &q_a, &q_b, &hom_s_ab)?;
    let chi_ca = chi_sqr_core(&hom2_ca, &q_ca, &q_c, &q_a, &hom_s_ca)?;
    let chi_cb = chi_sqr_core(&hom2_cb, &q_cb, &q_c, &q_b, &hom_s_cb)?;

    // ⟦Sqr[C,A], ⟦Sqr C, Sqr B⟧⟧, the common codomain.
    let final_cod = build_hom(&q_ca.cat, &hom_s_cb.cat, budget)?;

    // Path 1: χ, then ℓ at the double level, then restriction along χ_{C,A}.
    let mut cache = HomCache::new();
    let l_dbl = l_functor(&mut cache, &q_c.cat, &q_a.cat, &q_b.cat, budget)?;
    let hom_outer = build_hom(&hom_s_ca.cat, &hom_s_cb.cat, budget)?;
    let hm1 = hom_map(&chi_ca, &DoubleFunctor::identity(&hom_s_cb.cat), &q_ca.cat, &hom_outer, &final_cod)?;
    let path1 = hm1.after(&l_dbl).after(&chi_ab);

    // Path 2: Sqr(ℓ at the 2-category level), then χ of the hom
    // 2-categories, then postcomposition with χ_{C,B}.
    let outer2 = Hom2::build2(hom2_ca.cat(), hom2_cb.cat(), budget)?;
    let l2f = l2_core(&hom2_ab, &hom2_ca, &hom2_cb, &outer2)?;
    let q_outer = quintet(outer2.cat());
    let sqr_l2 = sqr_of_two_functor(&l2f, &q_ab, &q_outer)?;
    let hom_s_big = build_hom(&q_ca.cat, &q_cb.cat, budget)?;
    let chi_big = chi_sqr_core(&outer2, &q_outer, &q_ca, &q_cb, &hom_s_big)?;
    let hm2 = hom_map(&DoubleFunctor::identity(&q_ca.cat), &chi_cb, &q_ca.cat, &hom_s_big, &final_cod)?;
    let path2 = hm2.after(&chi_big).after(&sqr_l2);

    Ok(compare_functors(&path1, &path2, "associativity of the quintet comparison"))
}

// ---------------------------------------------------------------------------
// Unitality of χ
// ---------------------------------------------------------------------------

/// The reduced unit condition for `χ_H` at `A`: the comparison functor
/// preserves the identity point of `H⟦A,A⟧`, and collapsing `H⟦𝟙,A⟧` through
/// `χ_{𝟙,A}` gives back the identity of `H A`.
pub fn check_chi_h_unit(a: &FiniteDoubleCategory, budget: &Budget) -> Result<CheckOutcome> {
    let h_a = horizontal_two_category(a);

    // Identity point.
    let hom_aa = Hom2::build(a, a, budget)?;
    let hom2_haha = Hom2::build2(&h_a.cat, &h_a.cat, budget)?;
    let chi_aa = chi_h_core(&hom_aa, &h_a, &h_a, &hom2_haha)?;
    let i = hom_aa.inner.find_functor(&DoubleFunctor::identity(a))?;
    let j = hom2_haha
        .inner
        .find_functor(&DoubleFunctor::identity(&hom2_haha.dom))?;
    if chi_aa.obj[i.0] != j {
        return Ok(CheckOutcome {
            ok: false,
            witness: Some("the identity 2-functor is not preserved".into()),
        });
    }

    // Collapse of the hom out of the unit.
    let unit = zoo::terminal();
    let h_unit = horizontal_two_category(&unit);
    let hom_1a = Hom2::build(&unit, a, budget)?;
    let hom2_col = Hom2::build2(&h_unit.cat, &h_a.cat, budget)?;
    let chi_1a = chi_h_core(&hom_1a, &h_unit, &h_a, &hom2_col)?;
    let intro = unit_intro2(a, &hom_1a)?;
    let elim = unit_elim2(&hom2_col.cod, &hom2_col)?;
    let composite = elim.after(&chi_1a.after(&intro));
    Ok(compare_two_functors(
        &composite,
        &TwoFunctor::identity(&h_a.cat),
        "collapse of the unit hom",
    ))
}

/// The reduced unit condition for `χ_Sqr` at `A`: preservation of the
/// identity point of `Sqr[A,A]`, and the collapse of `Sqr[1,A]` through
/// `χ_{1,A}` giving back the identity of `Sqr A`.
pub fn check_chi_sqr_unit(a: &Finite2Category, budget: &Budget) -> Result<CheckOutcome> {
    let q_a = quintet(a);

    // Identity point.
    let hom2_aa = Hom2::build2(a, a, budget)?;
    let q_dom = quintet(hom2_aa.cat());
    let hom_s = build_hom(&q_a.cat, &q_a.cat, budget)?;
    let chi_aa = chi_sqr_core(&hom2_aa, &q_dom, &q_a, &q_a, &hom_s)?;
    let i = hom2_aa
        .inner
        .find_functor(&DoubleFunctor::identity(&embed(a)))?;
    let j = hom_s.find_functor(&DoubleFunctor::identity(&q_a.cat))?;
    if chi_aa.obj[i.0] != j {
        return Ok(CheckOutcome {
            ok: false,
            witness: Some("the identity 2-functor is not preserved".into()),
        });
    }

    // Collapse of the hom out of the unit.
    let unit2 = crate::two::terminal2();
    let q_unit = quintet(&unit2);
    let hom2_1a = Hom2::build2(&unit2, a, budget)?;
    let q_1a = quintet(hom2_1a.cat());
    let hom_s1a = build_hom(&q_unit.cat, &q_a.cat, budget)?;
    let chi_1a = chi_sqr_core(&hom2_1a, &q_1a, &q_unit, &q_a, &hom_s1a)?;
    let intro2 = unit_intro2(&embed(a), &hom2_1a)?;
    let intro = sqr_of_two_functor(&intro2, &q_a, &q_1a)?;
    let elim = crate::hom::unit_elim(&q_a.cat, &hom_s1a)?;
    let composite = elim.after(&chi_1a.after(&intro));
    Ok(compare_functors(
        &composite,
        &DoubleFunctor::identity(&q_a.cat),
        "collapse of the unit hom",
    ))
}

// ---------------------------------------------------------------------------
// Naturality of χ_H
// ---------------------------------------------------------------------------

/// Naturality of `χ_H` in the first argument, at a double functor
/// `f: A' → A`: the square `[H f, 1] ∘ χ_{A,B} = χ_{A',B} ∘ H⟦f, 1⟧`
/// commutes.
pub fn check_chi_h_natural(
    f: &DoubleFunctor,
    a_src: &FiniteDoubleCategory,
    a_tgt: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let h_a = horizontal_two_category(a_tgt);
    let h_a2 = horizontal_two_category(a_src);
    let h_b = horizontal_two_category(b);
    let hom_ab = Hom2::build(a_tgt, b, budget)?;
    let hom_a2b = Hom2::build(a_src, b, budget)?;
    let hom2_ab = Hom2::build2(&h_a.cat, &h_b.cat, budget)?;
    let hom2_a2b = Hom2::build2(&h_a2.cat, &h_b.cat, budget)?;
    let chi1 = chi_h_core(&hom_ab, &h_a, &h_b, &hom2_ab)?;
    let chi2 = chi_h_core(&hom_a2b, &h_a2, &h_b, &hom2_a2b)?;

    let hf = h_of_functor(f, &h_a2, &h_a)?;
    let lhs = two_hom_map(
        &hf.to_double(),
        &DoubleFunctor::identity(&hom2_ab.cod),
        &hom2_ab,
        &hom2_a2b,
    )?
    .after(&chi1);
    let restricted = hom_map(f, &DoubleFunctor::identity(b), a_src, &hom_ab.inner, &hom_a2b.inner)?;
    let rhs = chi2.after(&h_of_functor(&restricted, &hom_ab.h2, &hom_a2b.h2)?);
    Ok(compare_two_functors(&lhs, &rhs, "naturality of the horizontal comparison"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::iso::is_isomorphic;
    use crate::two::{arrow2, terminal2};

    fn budget() -> Budget {
        Budget::new(1_000_000_000)
    }

    #[test]
    fn the_hom_of_transposes_is_the_transpose_of_the_hom() {
        let (a, b) = (zoo::free_arrow_h(), zoo::free_arrow_h());
        let hom = build_hom(&a, &b, &budget()).unwrap();
        let hom_t = build_hom(&zoo::transpose(&a), &zoo::transpose(&b), &budget()).unwrap();
        assert!(is_isomorphic(&zoo::transpose(&hom.cat), &hom_t.cat));
    }

    #[test]
    fn chi_h_collapses_on_a_terminal_first_argument() {
        let chi = chi_h(&zoo::terminal(), &zoo::free_arrow_h(), &budget()).unwrap();
        // H⟦𝟙,B⟧ ≅ H B ≅ [1, H B]: the comparison must be a bijection on
        // every cell kind.
        assert_eq!(chi.hom_ab.cat().cell_count(), chi.hom2.cat().cell_count());
        let f = &chi.functor;
        let mut objs: Vec<usize> = f.obj.iter().map(|o| o.0).collect();
        objs.sort_unstable();
        assert_eq!(objs, (0..chi.hom2.cat().objects.len()).collect::<Vec<_>>());
    }

    #[test]
    fn chi_h_validates_on_two_free_arrows() {
        let chi = chi_h(&zoo::free_arrow_h(), &zoo::free_arrow_h(), &budget()).unwrap();
        assert_eq!(chi.functor.obj.len(), chi.hom_ab.cat().objects.len());
    }

    #[test]
    fn chi_v_validates_on_the_vertical_arrows() {
        let chi = chi_v(&zoo::free_arrow_v(), &zoo::free_arrow_v(), &budget()).unwrap();
        assert_eq!(chi.functor.obj.len(), chi.hom_ab.cat().objects.len());
    }

    #[test]
    fn chi_sqr_is_trivial_on_terminals() {
        let chi = chi_sqr(&terminal2(), &terminal2(), &budget()).unwrap();
        assert_eq!(chi.functor.obj.len(), 1);
        assert_eq!(chi.hom_s.cat.cell_count(), 4);
    }

    #[test]
    fn chi_sqr_validates_on_two_arrows() {
        let chi = chi_sqr(&arrow2(), &arrow2(), &budget()).unwrap();
        assert_eq!(chi.functor.obj.len(), chi.hom2_ab.cat().objects.len());
    }

    #[test]
    fn chi_h_assoc_holds_on_terminals() {
        let t = zoo::terminal();
        let out = check_chi_h_assoc(&t, &t, &t, &budget()).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn chi_h_assoc_holds_on_arrows_over_the_unit() {
        let a = zoo::free_arrow_h();
        let out = check_chi_h_assoc(&a, &a, &zoo::terminal(), &budget()).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn chi_sqr_assoc_holds_on_arrows_over_the_unit() {
        let out =
            check_chi_sqr_assoc(&arrow2(), &arrow2(), &terminal2(), &budget()).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn chi_h_unit_holds() {
        for a in [zoo::terminal(), zoo::free_arrow_h()] {
            let out = check_chi_h_unit(&a, &budget()).unwrap();
            assert!(out.ok, "{:?}", out.witness);
        }
    }

    #[test]
    fn chi_sqr_unit_holds() {
        for a in [terminal2(), arrow2()] {
            let out = check_chi_sqr_unit(&a, &budget()).unwrap();
            assert!(out.ok, "{:?}", out.witness);
        }
    }

    #[test]
    fn chi_h_is_natural_in_the_first_argument() {
        // A functor from the free arrow into the generator: send the arrow
        // to the top 1-cell.
        let a_src = zoo::free_arrow_h();
        let a_tgt = zoo::generator();
        let budget = budget();
        let homs = crate::functor::enumerate_functors(&a_src, &a_tgt, &budget).unwrap();
        let f = homs
            .iter()
            .find(|f| f.obj[0] != f.obj[1])
            .expect("a non-constant functor exists")
            .clone();
        let out = check_chi_h_natural(&f, &a_src, &a_tgt, &zoo::free_arrow_h(), &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }
}

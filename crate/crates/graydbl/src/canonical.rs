//! Canonical double functors between iterated hom double categories, and
//! executable checks of the equations they satisfy.
//!
//! The three families constructed here are
//!
//! * `l_functor(D, A, B): hom(A,B) → hom(hom(D,A), hom(D,B))` — whiskering on
//!   the domain side,
//! * `r_functor(D, A, B): hom(A,B) → hom(hom(B,D), hom(A,D))` — whiskering on
//!   the codomain side (contravariant), and
//! * `f_functor(D, A, B): hom(A, hom(B,D)) → hom(B, hom(A,D))` — the swap
//!   obtained from `r`, which is an involution.
//!
//! Every diagram check compares composite functors pointwise on each cell and
//! returns a witness cell on failure. The canonical identification
//! `hom(unit, X) ≅ X` is applied explicitly wherever needed.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::budget::Budget;
use crate::dbl::category::*;
use crate::dbl::zoo;
use crate::error::Result;
use crate::functor::DoubleFunctor;
use crate::hom::*;

/// Result of a single diagram check: whether it held, and on failure a
/// human-readable witness naming the first cell where the two sides differ.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckOutcome {
    pub ok: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome { ok: true, witness: None }
    }
}

/// Compare two parallel double functors cell by cell.
pub fn compare_functors(lhs: &DoubleFunctor, rhs: &DoubleFunctor, label: &str) -> CheckOutcome {
    let witness = |kind: &str, i: usize, l: usize, r: usize| CheckOutcome {
        ok: false,
        witness: Some(format!("{label}: {kind} {i} maps to {l} on one side, {r} on the other")),
    };
    for (i, (l, r)) in lhs.obj.iter().zip(&rhs.obj).enumerate() {
        if l != r {
            return witness("object", i, l.0, r.0);
        }
    }
    for (i, (l, r)) in lhs.h.iter().zip(&rhs.h).enumerate() {
        if l != r {
            return witness("horizontal 1-cell", i, l.0, r.0);
        }
    }
    for (i, (l, r)) in lhs.v.iter().zip(&rhs.v).enumerate() {
        if l != r {
            return witness("vertical 1-cell", i, l.0, r.0);
        }
    }
    for (i, (l, r)) in lhs.sq.iter().zip(&rhs.sq).enumerate() {
        if l != r {
            return witness("square", i, l.0, r.0);
        }
    }
    if lhs.obj.len() != rhs.obj.len()
        || lhs.h.len() != rhs.h.len()
        || lhs.v.len() != rhs.v.len()
        || lhs.sq.len() != rhs.sq.len()
    {
        return CheckOutcome {
            ok: false,
            witness: Some(format!("{label}: functors have different shapes")),
        };
    }
    CheckOutcome::pass()
}

/// A memo table for hom double categories, interning categories by value so
/// that nested hom constructions are computed once.
#[derive(Default)]
pub struct HomCache {
    cats: Vec<FiniteDoubleCategory>,
    homs: BTreeMap<(usize, usize), Rc<HomDouble>>,
    stricts: BTreeMap<(usize, usize), Rc<(HomDouble, DoubleFunctor)>>,
}

impl HomCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, c: &FiniteDoubleCategory) -> usize {
        if let Some(i) = self.cats.iter().position(|x| x == c) {
            i
        } else {
            self.cats.push(c.clone());
            self.cats.len() - 1
        }
    }

    /// The (cached) hom double category `hom(a, b)`.
    pub fn hom(
        &mut self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
        budget: &Budget,
    ) -> Result<Rc<HomDouble>> {
        let key = (self.intern(a), self.intern(b));
        if let Some(h) = self.homs.get(&key) {
            return Ok(Rc::clone(h));
        }
        let h = Rc::new(build_hom(a, b, budget)?);
        self.homs.insert(key, Rc::clone(&h));
        Ok(h)
    }

    /// The (cached) strict hom sub-double-category and its inclusion into the
    /// full hom.
    pub fn strict(
        &mut self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
        budget: &Budget,
    ) -> Result<Rc<(HomDouble, DoubleFunctor)>> {
        let key = (self.intern(a), self.intern(b));
        if let Some(s) = self.stricts.get(&key) {
            return Ok(Rc::clone(s));
        }
        let full = self.hom(a, b, budget)?;
        let (strict, inclusion) = strict_sub(a, b, &full)?;
        let s = Rc::new((strict, inclusion));
        self.stricts.insert(key, Rc::clone(&s));
        Ok(s)
    }
}

/// The shared cell-level construction behind [`l_functor`] and
/// [`l_cartesian_functor`]: given hom structures (full or strict) for
/// `hom(a,b)`, `hom(d,a)`, `hom(d,b)` and the outer
/// `hom(hom(d,a), hom(d,b))`, produce the whiskering functor.
pub fn l_functor_core(
    d: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    hom_ab: &HomDouble,
    hom_da: &HomDouble,
    hom_db: &HomDouble,
    outer: &HomDouble,
) -> Result<DoubleFunctor> {
    let idd = DoubleFunctor::identity(d);
    let send = |g: &DoubleFunctor| -> Result<DoubleFunctor> {
        hom_map(&idd, g, d, hom_da, hom_db)
    };

    let mut obj = Vec::new();
    for g in &hom_ab.functors {
        obj.push(outer.find_functor(&send(g)?)?);
    }

    // Images of horizontal 1-cells, kept by value so squares can reuse them.
    let mut img_h: Vec<HPseudo> = Vec::new();
    for x in &hom_ab.hpseudos {
        let mut comp_obj = Vec::new();
        for hfun in &hom_da.functors {
            comp_obj.push(hom_db.find_hpseudo(&hpseudo_precompose(x, hfun, d))?);
        }
        let mut comp_v = Vec::new();
        for q in &hom_da.vpseudos {
            let m = Modification {
                top: hpseudo_precompose(x, &q.source, d),
                left: vpseudo_postcompose(q, &x.source),
                bottom: hpseudo_precompose(x, &q.target, d),
                right: vpseudo_postcompose(q, &x.target),
                comp: d.obj_ids().map(|a0| x.comp_v[q.comp_obj[a0.0].0]).collect(),
            };
            comp_v.push(hom_db.find_mod(&m)?);
        }
        let mut comp_h = Vec::new();
        let mut comp_h_inv = Vec::new();
        for p in &hom_da.hpseudos {
            let top = compose_hpseudo(
                d,
                b,
                &hpseudo_postcompose(p, &x.source),
                &hpseudo_precompose(x, &p.target, d),
            );
            let bottom = compose_hpseudo(
                d,
                b,
                &hpseudo_precompose(x, &p.source, d),
                &hpseudo_postcompose(p, &x.target),
            );
            let left = identity_vpseudo(d, b, &top.source);
            let right = identity_vpseudo(d, b, &top.target);
            comp_h.push(hom_db.find_mod(&Modification {
                top: top.clone(),
                left: left.clone(),
                bottom: bottom.clone(),
                right: right.clone(),
                comp: d.obj_ids().map(|a0| x.comp_h[p.comp_obj[a0.0].0]).collect(),
            })?);
            comp_h_inv.push(hom_db.find_mod(&Modification {
                top: bottom,
                left,
                bottom: top,
                right,
                comp: d.obj_ids().map(|a0| x.comp_h_inv[p.comp_obj[a0.0].0]).collect(),
            })?);
        }
        img_h.push(HPseudo {
            source: send(&x.source)?,
            target: send(&x.target)?,
            comp_obj,
            comp_v,
            comp_h,
            comp_h_inv,
        });
    }

    let mut img_v: Vec<VPseudo> = Vec::new();
    for y in &hom_ab.vpseudos {
        let mut comp_obj = Vec::new();
        for hfun in &hom_da.functors {
            comp_obj.push(hom_db.find_vpseudo(&vpseudo_precompose(y, hfun, d))?);
        }
        let mut comp_h = Vec::new();
        for p in &hom_da.hpseudos {
            let m = Modification {
                top: hpseudo_postcompose(p, &y.source),
                left: vpseudo_precompose(y, &p.source, d),
                bottom: hpseudo_postcompose(p, &y.target),
                right: vpseudo_precompose(y, &p.target, d),
                comp: d.obj_ids().map(|a0| y.comp_h[p.comp_obj[a0.0].0]).collect(),
            };
            comp_h.push(hom_db.find_mod(&m)?);
        }
        let mut comp_v = Vec::new();
        let mut comp_v_inv = Vec::new();
        for q in &hom_da.vpseudos {
            let top = identity_hpseudo(d, b, &y.source.after(&q.source));
            let bottom = identity_hpseudo(d, b, &y.target.after(&q.target));
            let left = compose_vpseudo(
                d,
                b,
                &vpseudo_precompose(y, &q.source, d),
                &vpseudo_postcompose(q, &y.target),
            );
            let right = compose_vpseudo(
                d,
                b,
                &vpseudo_postcompose(q, &y.source),
                &vpseudo_precompose(y, &q.target, d),
            );
            comp_v.push(hom_db.find_mod(&Modification {
                top: top.clone(),
                left: left.clone(),
                bottom: bottom.clone(),
                right: right.clone(),
                comp: d.obj_ids().map(|a0| y.comp_v[q.comp_obj[a0.0].0]).collect(),
            })?);
            comp_v_inv.push(hom_db.find_mod(&Modification {
                top,
                left: right,
                bottom,
                right: left,
                comp: d.obj_ids().map(|a0| y.comp_v_inv[q.comp_obj[a0.0].0]).collect(),
            })?);
        }
        img_v.push(VPseudo {
            source: send(&y.source)?,
            target: send(&y.target)?,
            comp_obj,
            comp_h,
            comp_v,
            comp_v_inv,
        });
    }

    let mut h = Vec::new();
    for x in &img_h {
        h.push(outer.find_hpseudo(x)?);
    }
    let mut v = Vec::new();
    for y in &img_v {
        v.push(outer.find_vpseudo(y)?);
    }

    let mut sq = Vec::new();
    for m in &hom_ab.mods {
        let ti = hom_ab.find_hpseudo(&m.top)?;
        let bi = hom_ab.find_hpseudo(&m.bottom)?;
        let li = hom_ab.find_vpseudo(&m.left)?;
        let ri = hom_ab.find_vpseudo(&m.right)?;
        let mut comp = Vec::new();
        for hfun in &hom_da.functors {
            comp.push(hom_db.find_mod(&modification_precompose(m, hfun, d))?);
        }
        sq.push(outer.find_mod(&Modification {
            top: img_h[ti.0].clone(),
            left: img_v[li.0].clone(),
            bottom: img_h[bi.0].clone(),
            right: img_v[ri.0].clone(),
            comp,
        })?);
    }

    Ok(DoubleFunctor { obj, h, v, sq })
}

/// The whiskering functor `hom(A,B) → hom(hom(D,A), hom(D,B))`.
pub fn l_functor(
    cache: &mut HomCache,
    d: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let hom_ab = cache.hom(a, b, budget)?;
    let hom_da = cache.hom(d, a, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let outer = cache.hom(&hom_da.cat.clone(), &hom_db.cat.clone(), budget)?;
    l_functor_core(d, b, &hom_ab, &hom_da, &hom_db, &outer)
}

/// The Cartesian variant of [`l_functor`] on strict homs:
/// `shom(A,B) → shom(shom(C,A), shom(C,B))`.
pub fn l_cartesian_functor(
    cache: &mut HomCache,
    c: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let sab = cache.strict(a, b, budget)?;
    let sca = cache.strict(c, a, budget)?;
    let scb = cache.strict(c, b, budget)?;
    let souter = cache.strict(&sca.0.cat.clone(), &scb.0.cat.clone(), budget)?;
    l_functor_core(c, b, &sab.0, &sca.0, &scb.0, &souter.0)
}

/// The contravariant whiskering functor `hom(A,B) → hom(hom(B,D), hom(A,D))`.
pub fn r_functor(
    cache: &mut HomCache,
    d: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let hom_ab = cache.hom(a, b, budget)?;
    let hom_bd = cache.hom(b, d, budget)?;
    let hom_ad = cache.hom(a, d, budget)?;
    let outer = cache.hom(&hom_bd.cat.clone(), &hom_ad.cat.clone(), budget)?;
    let idd = DoubleFunctor::identity(d);
    let send = |f: &DoubleFunctor| -> Result<DoubleFunctor> {
        hom_map(f, &idd, a, &hom_bd, &hom_ad)
    };

    let mut obj = Vec::new();
    for f in &hom_ab.functors {
        obj.push(outer.find_functor(&send(f)?)?);
    }

    let mut img_h: Vec<HPseudo> = Vec::new();
    for x in &hom_ab.hpseudos {
        let mut comp_obj = Vec::new();
        for hfun in &hom_bd.functors {
            comp_obj.push(hom_ad.find_hpseudo(&hpseudo_postcompose(x, hfun))?);
        }
        let mut comp_v = Vec::new();
        for q in &hom_bd.vpseudos {
            let m = Modification {
                top: hpseudo_postcompose(x, &q.source),
                left: vpseudo_precompose(q, &x.source, a),
                bottom: hpseudo_postcompose(x, &q.target),
                right: vpseudo_precompose(q, &x.target, a),
                comp: a.obj_ids().map(|a0| q.comp_h[x.comp_obj[a0.0].0]).collect(),
            };
            comp_v.push(hom_ad.find_mod(&m)?);
        }
        let mut comp_h = Vec::new();
        let mut comp_h_inv = Vec::new();
        for p in &hom_bd.hpseudos {
            let top = compose_hpseudo(
                a,
                d,
                &hpseudo_precompose(p, &x.source, a),
                &hpseudo_postcompose(x, &p.target),
            );
            let bottom = compose_hpseudo(
                a,
                d,
                &hpseudo_postcompose(x, &p.source),
                &hpseudo_precompose(p, &x.target, a),
            );
            let left = identity_vpseudo(a, d, &top.source);
            let right = identity_vpseudo(a, d, &top.target);
            comp_h.push(hom_ad.find_mod(&Modification {
                top: top.clone(),
                left: left.clone(),
                bottom: bottom.clone(),
                right: right.clone(),
                comp: a.obj_ids().map(|a0| p.comp_h_inv[x.comp_obj[a0.0].0]).collect(),
            })?);
            comp_h_inv.push(hom_ad.find_mod(&Modification {
                top: bottom,
                left,
                bottom: top,
                right,
                comp: a.obj_ids().map(|a0| p.comp_h[x.comp_obj[a0.0].0]).collect(),
            })?);
        }
        img_h.push(HPseudo {
            source: send(&x.source)?,
            target: send(&x.target)?,
            comp_obj,
            comp_v,
            comp_h,
            comp_h_inv,
        });
    }

    let mut img_v: Vec<VPseudo> = Vec::new();
    for y in &hom_ab.vpseudos {
        let mut comp_obj = Vec::new();
        for hfun in &hom_bd.functors {
            comp_obj.push(hom_ad.find_vpseudo(&vpseudo_postcompose(y, hfun))?);
        }
        let mut comp_h = Vec::new();
        for p in &hom_bd.hpseudos {
            let m = Modification {
                top: hpseudo_precompose(p, &y.source, a),
                left: vpseudo_postcompose(y, &p.source),
                bottom: hpseudo_precompose(p, &y.target, a),
                right: vpseudo_postcompose(y, &p.target),
                comp: a.obj_ids().map(|a0| p.comp_v[y.comp_obj[a0.0].0]).collect(),
            };
            comp_h.push(hom_ad.find_mod(&m)?);
        }
        let mut comp_v = Vec::new();
        let mut comp_v_inv = Vec::new();
        for q in &hom_bd.vpseudos {
            let top = identity_hpseudo(a, d, &q.source.after(&y.source));
            let bottom = identity_hpseudo(a, d, &q.target.after(&y.target));
            let left = compose_vpseudo(
                a,
                d,
                &vpseudo_postcompose(y, &q.source),
                &vpseudo_precompose(q, &y.target, a),
            );
            let right = compose_vpseudo(
                a,
                d,
                &vpseudo_precompose(q, &y.source, a),
                &vpseudo_postcompose(y, &q.target),
            );
            comp_v.push(hom_ad.find_mod(&Modification {
                top: top.clone(),
                left: left.clone(),
                bottom: bottom.clone(),
                right: right.clone(),
                comp: a.obj_ids().map(|a0| q.comp_v_inv[y.comp_obj[a0.0].0]).collect(),
            })?);
            comp_v_inv.push(hom_ad.find_mod(&Modification {
                top,
                left: right,
                bottom,
                right: left,
                comp: a.obj_ids().map(|a0| q.comp_v[y.comp_obj[a0.0].0]).collect(),
            })?);
        }
        img_v.push(VPseudo {
            source: send(&y.source)?,
            target: send(&y.target)?,
            comp_obj,
            comp_h,
            comp_v,
            comp_v_inv,
        });
    }

    let mut h = Vec::new();
    for x in &img_h {
        h.push(outer.find_hpseudo(x)?);
    }
    let mut v = Vec::new();
    for y in &img_v {
        v.push(outer.find_vpseudo(y)?);
    }
    let mut sq = Vec::new();
    for m in &hom_ab.mods {
        let ti = hom_ab.find_hpseudo(&m.top)?;
        let bi = hom_ab.find_hpseudo(&m.bottom)?;
        let li = hom_ab.find_vpseudo(&m.left)?;
        let ri = hom_ab.find_vpseudo(&m.right)?;
        let mut comp = Vec::new();
        for hfun in &hom_bd.functors {
            comp.push(hom_ad.find_mod(&modification_postcompose(m, hfun))?);
        }
        sq.push(outer.find_mod(&Modification {
            top: img_h[ti.0].clone(),
            left: img_v[li.0].clone(),
            bottom: img_h[bi.0].clone(),
            right: img_v[ri.0].clone(),
            comp,
        })?);
    }

    Ok(DoubleFunctor { obj, h, v, sq })
}

/// The evaluation-style point `X → hom(hom(X,D), D)` obtained from
/// `r_functor(D, unit, X)` by collapsing `hom(unit, −) ≅ −` on both ends.
pub fn r_point(
    cache: &mut HomCache,
    x: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let unit = zoo::terminal();
    let hom_1x = cache.hom(&unit, x, budget)?;
    let hom_xd = cache.hom(x, d, budget)?;
    let hom_1d = cache.hom(&unit, d, budget)?;
    let r = r_functor(cache, d, &unit, x, budget)?;
    let outer = cache.hom(&hom_xd.cat.clone(), &hom_1d.cat.clone(), budget)?;
    let hom_xd_d = cache.hom(&hom_xd.cat.clone(), d, budget)?;
    let elim = unit_elim(d, &hom_1d)?;
    let post = hom_map(
        &DoubleFunctor::identity(&hom_xd.cat),
        &elim,
        &hom_xd.cat,
        &outer,
        &hom_xd_d,
    )?;
    let intro = unit_intro(x, &hom_1x)?;
    Ok(post.after(&r.after(&intro)))
}

/// The swap functor `hom(A, hom(B,D)) → hom(B, hom(A,D))`.
pub fn f_functor(
    cache: &mut HomCache,
    d: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let hom_bd = cache.hom(b, d, budget)?;
    let hom_ad = cache.hom(a, d, budget)?;
    let bd_cat = hom_bd.cat.clone();
    let r1 = r_functor(cache, d, a, &bd_cat, budget)?;
    // r1 : hom(A, hom(B,D)) → hom(hom(hom(B,D), D), hom(A,D))
    let hom_bdd = cache.hom(&bd_cat, d, budget)?;
    let rp = r_point(cache, b, d, budget)?; // B → hom(hom(B,D), D)
    let dom_mid = cache.hom(&hom_bdd.cat.clone(), &hom_ad.cat.clone(), budget)?;
    let dom_out = cache.hom(b, &hom_ad.cat.clone(), budget)?;
    let swap = hom_map(&rp, &DoubleFunctor::identity(&hom_ad.cat), b, &dom_mid, &dom_out)?;
    Ok(swap.after(&r1))
}

// ---------------------------------------------------------------------------
// Diagram checks
// ---------------------------------------------------------------------------

/// Compatibility of `l_functor` with itself across two parameters `C`, `D`:
/// whiskering by `D` and then by `C` inside agrees with whiskering by `C`
/// first and then by `hom(C,D)` outside.
pub fn check_l_commutation(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_da = cache.hom(d, a, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let hom_cd = cache.hom(c, d, budget)?;
    let hom_ca = cache.hom(c, a, budget)?;
    let hom_cb = cache.hom(c, b, budget)?;
    let (da, db, cd, ca, cb) = (
        hom_da.cat.clone(),
        hom_db.cat.clone(),
        hom_cd.cat.clone(),
        hom_ca.cat.clone(),
        hom_cb.cat.clone(),
    );

    // Side 1: l^D then hom(1, l^C_{D,B}).
    let l_d = l_functor(cache, d, a, b, budget)?;
    let l_c_db = l_functor(cache, c, d, b, budget)?;
    let outer1 = cache.hom(&da, &db, budget)?;
    let cdb = cache.hom(&cd, &cb, budget)?; // hom(hom(C,D), hom(C,B))
    let cdb_cat = cdb.cat.clone();
    let final_hom = cache.hom(&da, &cdb_cat, budget)?;
    let post = hom_map(
        &DoubleFunctor::identity(&da),
        &l_c_db,
        &da,
        &outer1,
        &final_hom,
    )?;
    let side1 = post.after(&l_d);

    // Side 2: l^C then l^{hom(C,D)} then hom(l^C_{D,A}, 1).
    let l_c = l_functor(cache, c, a, b, budget)?;
    let l_big = l_functor(cache, &cd, &ca, &cb, budget)?;
    let l_c_da = l_functor(cache, c, d, a, budget)?;
    let cda = cache.hom(&cd, &ca, budget)?; // hom(hom(C,D), hom(C,A))
    let cda_cat = cda.cat.clone();
    let big = cache.hom(&cda_cat, &cdb_cat, budget)?;
    let pre = hom_map(
        &l_c_da,
        &DoubleFunctor::identity(&cdb_cat),
        &da,
        &big,
        &final_hom,
    )?;
    let side2 = pre.after(&l_big.after(&l_c));

    Ok(compare_functors(&side1, &side2, "l-commutation"))
}

/// `l_functor(A, A, B)` followed by evaluation at the identity functor and
/// the `hom(unit, −)` collapse is the identity on `hom(A,B)`.
pub fn check_l_identity(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let unit = zoo::terminal();
    let hom_ab = cache.hom(a, b, budget)?;
    let hom_aa = cache.hom(a, a, budget)?;
    let (ab, aa) = (hom_ab.cat.clone(), hom_aa.cat.clone());
    let l = l_functor(cache, a, a, b, budget)?;
    let outer = cache.hom(&aa, &ab, budget)?;
    let hom_1ab = cache.hom(&unit, &ab, budget)?;
    let pt = point_functor(&hom_aa, &DoubleFunctor::identity(a))?;
    let eval = hom_map(&pt, &DoubleFunctor::identity(&ab), &unit, &outer, &hom_1ab)?;
    let elim = unit_elim(&ab, &hom_1ab)?;
    let side = elim.after(&eval.after(&l));
    Ok(compare_functors(
        &side,
        &DoubleFunctor::identity(&ab),
        "l-identity",
    ))
}

/// The compatibility square for `r_functor` across its two hom arguments.
pub fn check_r_square(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_ab = cache.hom(a, b, budget)?;
    let hom_bd = cache.hom(b, d, budget)?;
    let hom_ad = cache.hom(a, d, budget)?;
    let (ab, bd, ad) = (hom_ab.cat.clone(), hom_bd.cat.clone(), hom_ad.cat.clone());

    // Top: hom(1, r_point(B, D)).
    let rp_b = r_point(cache, b, d, budget)?; // B → hom(hom(B,D), D)
    let hom_bdd = cache.hom(&bd, d, budget)?;
    let bdd = hom_bdd.cat.clone();
    let final_hom = cache.hom(a, &bdd, budget)?;
    let hom_ab_rc = cache.hom(a, b, budget)?;
    let top = hom_map(&DoubleFunctor::identity(a), &rp_b, a, &hom_ab_rc, &final_hom)?;

    // Bottom: r then r then hom(r_point(A, D), 1).
    let r1 = r_functor(cache, d, a, b, budget)?; // → hom(hom(B,D), hom(A,D))
    let r2 = r_functor(cache, d, &bd, &ad, budget)?;
    // r2 : hom(hom(B,D), hom(A,D)) → hom(hom(hom(A,D),D), hom(hom(B,D),D))
    let rp_a = r_point(cache, a, d, budget)?; // A → hom(hom(A,D), D)
    let hom_add = cache.hom(&ad, d, budget)?;
    let add = hom_add.cat.clone();
    let mid = cache.hom(&add, &bdd, budget)?;
    let pre = hom_map(&rp_a, &DoubleFunctor::identity(&bdd), a, &mid, &final_hom)?;
    let bottom = pre.after(&r2.after(&r1));
    let _ = ab;
    Ok(compare_functors(&top, &bottom, "r-square"))
}

/// Double dualization collapses: `r_point(hom(A,D), D)` followed by
/// `hom(r_point(A,D), 1)` is the identity on `hom(A,D)`.
pub fn check_r_identity(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_ad = cache.hom(a, d, budget)?;
    let ad = hom_ad.cat.clone();
    let first = r_point(cache, &ad, d, budget)?; // hom(A,D) → hom(hom(hom(A,D),D), D)
    let rp_a = r_point(cache, a, d, budget)?;
    let hom_add = cache.hom(&ad, d, budget)?;
    let add = hom_add.cat.clone();
    let dom = cache.hom(&add, d, budget)?;
    let cod = cache.hom(a, d, budget)?;
    let second = hom_map(&rp_a, &DoubleFunctor::identity(d), a, &dom, &cod)?;
    let side = second.after(&first);
    Ok(compare_functors(
        &side,
        &DoubleFunctor::identity(&ad),
        "r-identity",
    ))
}

/// The pentagon mixing `l_functor` and `r_functor`, including the shortcut
/// triangle through `f_functor`.
pub fn check_lr_pentagon(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_da = cache.hom(d, a, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let (da, db) = (hom_da.cat.clone(), hom_db.cat.clone());

    // Right path: l^{hom(D,A)} then hom(r_point(D, A), 1).
    let l_big = l_functor(cache, &da, a, b, budget)?;
    let hom_daa = cache.hom(&da, a, budget)?;
    let hom_dab = cache.hom(&da, b, budget)?;
    let (daa, dab) = (hom_daa.cat.clone(), hom_dab.cat.clone());
    let rp_da = r_point(cache, d, a, budget)?; // D → hom(hom(D,A), A)
    let top_right = cache.hom(&daa, &dab, budget)?;
    let final_hom = cache.hom(d, &dab, budget)?;
    let pre = hom_map(&rp_da, &DoubleFunctor::identity(&dab), d, &top_right, &final_hom)?;
    let side1 = pre.after(&l_big);

    // Left path: l^D then r^B then hom(r_point(D, B), 1).
    let l_d = l_functor(cache, d, a, b, budget)?;
    let r_b = r_functor(cache, b, &da, &db, budget)?;
    // r_b : hom(hom(D,A), hom(D,B)) → hom(hom(hom(D,B),B), hom(hom(D,A),B))
    let hom_dbb = cache.hom(&db, b, budget)?;
    let dbb = hom_dbb.cat.clone();
    let rp_db = r_point(cache, d, b, budget)?; // D → hom(hom(D,B), B)
    let mid = cache.hom(&dbb, &dab, budget)?;
    let pre2 = hom_map(&rp_db, &DoubleFunctor::identity(&dab), d, &mid, &final_hom)?;
    let side2 = pre2.after(&r_b.after(&l_d));

    let outer = compare_functors(&side1, &side2, "lr-pentagon");
    if !outer.ok {
        return Ok(outer);
    }

    // Shortcut triangle: r^B then hom(r_point(D,B), 1) equals f^B.
    let f = f_functor(cache, b, &da, d, budget)?;
    let shortcut = pre2.after(&r_b);
    Ok(compare_functors(&shortcut, &f, "lr-pentagon-triangle"))
}

/// The square obtained by applying the pentagon twice: the long way around
/// through the double dual of `hom(C,A)` equals the single whiskering by `C`.
pub fn check_lr_square(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_ca = cache.hom(c, a, budget)?;
    let ca = hom_ca.cat.clone();
    let hom_caa = cache.hom(&ca, a, budget)?;
    let caa = hom_caa.cat.clone(); // hom(hom(C,A), A)

    // Long side: l^{hom(hom(C,A),A)} then hom(r_point(hom(C,A),A), 1)
    // then hom(1, hom(r_point(C,A), 1)).
    let l_big = l_functor(cache, &caa, a, b, budget)?;
    let hom_caaa = cache.hom(&caa, a, budget)?;
    let hom_caab = cache.hom(&caa, b, budget)?;
    let (caaa, caab) = (hom_caaa.cat.clone(), hom_caab.cat.clone());
    let rp_caa = r_point(cache, &ca, a, budget)?; // hom(C,A) → hom(hom(hom(C,A),A), A)
    let top_right = cache.hom(&caaa, &caab, budget)?;
    let mid_hom = cache.hom(&ca, &caab, budget)?;
    let step2 = hom_map(&rp_caa, &DoubleFunctor::identity(&caab), &ca, &top_right, &mid_hom)?;

    let rp_c = r_point(cache, c, a, budget)?; // C → hom(hom(C,A), A) = caa
    let hom_cb = cache.hom(c, b, budget)?;
    let cb = hom_cb.cat.clone();
    let inner = cache.hom(&caa, b, budget)?;
    let inner_cat = inner.cat.clone();
    let _ = inner_cat;
    let hom_cb_from_caab = hom_map(
        &rp_c,
        &DoubleFunctor::identity(b),
        c,
        &*cache.hom(&caa, b, budget)?,
        &*cache.hom(c, b, budget)?,
    )?; // hom(hom(hom(C,A),A), B)... this is hom(r_point(C,A), 1): caab → cb
    let final_hom = cache.hom(&ca, &cb, budget)?;
    let step3 = hom_map(
        &DoubleFunctor::identity(&ca),
        &hom_cb_from_caab,
        &ca,
        &mid_hom,
        &final_hom,
    )?;
    let side1 = step3.after(&step2.after(&l_big));

    let side2 = l_functor(cache, c, a, b, budget)?;
    Ok(compare_functors(&side1, &side2, "lr-square"))
}

/// `f_functor` is an involution: `f(D,B,A) ∘ f(D,A,B)` is the identity.
pub fn check_f_involution(
    cache: &mut HomCache,
    d: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let f1 = f_functor(cache, d, a, b, budget)?;
    let f2 = f_functor(cache, d, b, a, budget)?;
    let hom_bd = cache.hom(b, d, budget)?;
    let bd = hom_bd.cat.clone();
    let hom_abd = cache.hom(a, &bd, budget)?;
    let dom = hom_abd.cat.clone();
    let side = f2.after(&f1);
    Ok(compare_functors(
        &side,
        &DoubleFunctor::identity(&dom),
        "f-involution",
    ))
}

/// The Cartesian whiskering functor commutes with the strict-hom inclusions.
pub fn check_l_cartesian_inclusion(
    cache: &mut HomCache,
    c: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let sab = cache.strict(a, b, budget)?;
    let sca = cache.strict(c, a, budget)?;
    let scb = cache.strict(c, b, budget)?;
    let hom_ca = cache.hom(c, a, budget)?;
    let hom_cb = cache.hom(c, b, budget)?;
    let (sca_cat, scb_cat) = (sca.0.cat.clone(), scb.0.cat.clone());
    let (ca, cb) = (hom_ca.cat.clone(), hom_cb.cat.clone());

    // Pseudo side: include, whisker, then restrict along the inclusions.
    let l = l_functor(cache, c, a, b, budget)?;
    let outer_full = cache.hom(&ca, &cb, budget)?;
    let mixed1 = cache.hom(&sca_cat, &cb, budget)?;
    let restrict = hom_map(
        &sca.1,
        &DoubleFunctor::identity(&cb),
        &sca_cat,
        &outer_full,
        &mixed1,
    )?;
    let side1 = restrict.after(&l.after(&sab.1));

    // Strict side: whisker strictly, include at the outer level, then push
    // forward along the codomain inclusion.
    let lx = l_cartesian_functor(cache, c, a, b, budget)?;
    let souter = cache.strict(&sca_cat, &scb_cat, budget)?;
    let mixed0 = cache.hom(&sca_cat, &scb_cat, budget)?;
    let push = hom_map(
        &DoubleFunctor::identity(&sca_cat),
        &scb.1,
        &sca_cat,
        &mixed0,
        &mixed1,
    )?;
    let side2 = push.after(&souter.1.after(&lx));

    Ok(compare_functors(&side1, &side2, "l-cartesian-inclusion"))
}

/// Naturality of `l_functor` in its contravariant argument along `u: A' → A`.
pub fn check_l_natural_contra(
    cache: &mut HomCache,
    u: &DoubleFunctor,
    a2: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_da = cache.hom(d, a, budget)?;
    let hom_da2 = cache.hom(d, a2, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let (da, da2, db) = (hom_da.cat.clone(), hom_da2.cat.clone(), hom_db.cat.clone());

    let l_a = l_functor(cache, d, a, b, budget)?;
    let inner = hom_map(
        &DoubleFunctor::identity(d),
        u,
        d,
        &*cache.hom(d, a2, budget)?,
        &*cache.hom(d, a, budget)?,
    )?; // hom(D,A') → hom(D,A)
    let outer_a = cache.hom(&da, &db, budget)?;
    let mixed = cache.hom(&da2, &db, budget)?;
    let side1 = hom_map(&inner, &DoubleFunctor::identity(&db), &da2, &outer_a, &mixed)?
        .after(&l_a);

    let restrict = hom_map(
        u,
        &DoubleFunctor::identity(b),
        a2,
        &*cache.hom(a, b, budget)?,
        &*cache.hom(a2, b, budget)?,
    )?;
    let side2 = l_functor(cache, d, a2, b, budget)?.after(&restrict);
    Ok(compare_functors(&side1, &side2, "l-naturality-contra"))
}

/// Naturality of `l_functor` in its covariant argument along `w: B → B'`.
pub fn check_l_natural_co(
    cache: &mut HomCache,
    w: &DoubleFunctor,
    b: &FiniteDoubleCategory,
    b2: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_da = cache.hom(d, a, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let hom_db2 = cache.hom(d, b2, budget)?;
    let (da, db, db2) = (hom_da.cat.clone(), hom_db.cat.clone(), hom_db2.cat.clone());

    let l_b = l_functor(cache, d, a, b, budget)?;
    let inner = hom_map(
        &DoubleFunctor::identity(d),
        w,
        d,
        &*cache.hom(d, b, budget)?,
        &*cache.hom(d, b2, budget)?,
    )?;
    let outer_b = cache.hom(&da, &db, budget)?;
    let mixed = cache.hom(&da, &db2, budget)?;
    let side1 = hom_map(&DoubleFunctor::identity(&da), &inner, &da, &outer_b, &mixed)?
        .after(&l_b);

    let push = hom_map(
        &DoubleFunctor::identity(a),
        w,
        a,
        &*cache.hom(a, b, budget)?,
        &*cache.hom(a, b2, budget)?,
    )?;
    let side2 = l_functor(cache, d, a, b2, budget)?.after(&push);
    Ok(compare_functors(&side1, &side2, "l-naturality-co"))
}

/// Extranaturality of `l_functor` in its whiskering argument along
/// `u: D → D'`.
pub fn check_l_extranatural(
    cache: &mut HomCache,
    u: &DoubleFunctor,
    d: &FiniteDoubleCategory,
    d2: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let hom_da = cache.hom(d, a, budget)?;
    let hom_db = cache.hom(d, b, budget)?;
    let hom_d2a = cache.hom(d2, a, budget)?;
    let hom_d2b = cache.hom(d2, b, budget)?;
    let (da, db, d2a, d2b) = (
        hom_da.cat.clone(),
        hom_db.cat.clone(),
        hom_d2a.cat.clone(),
        hom_d2b.cat.clone(),
    );

    let restrict_a = hom_map(
        u,
        &DoubleFunctor::identity(a),
        d,
        &*cache.hom(d2, a, budget)?,
        &*cache.hom(d, a, budget)?,
    )?; // hom(D',A) → hom(D,A)... (contravariant in the first slot)
    let restrict_b = hom_map(
        u,
        &DoubleFunctor::identity(b),
        d,
        &*cache.hom(d2, b, budget)?,
        &*cache.hom(d, b, budget)?,
    )?;
    // Careful with variance: restrict_a maps hom(D', A) → hom(D, A)? No —
    // hom_map(u: D → D', 1) precomposes with u, so it maps hom(D', A) to
    // hom(D, A). Both sides below land in hom(hom(D',A)... exchange roles:
    // here u: D → D' means restrict_a : hom(D',A) → hom(D,A). The
    // extranaturality square is
    //   l^{D}  then hom(restrict_a, 1) : hom(A,B) → hom(hom(D',A), hom(D,B))
    //   l^{D'} then hom(1, restrict_b) : hom(A,B) → hom(hom(D',A), hom(D,B))
    let l_d = l_functor(cache, d, a, b, budget)?;
    let l_d2 = l_functor(cache, d2, a, b, budget)?;
    let outer_d = cache.hom(&da, &db, budget)?;
    let outer_d2 = cache.hom(&d2a, &d2b, budget)?;
    let mixed = cache.hom(&d2a, &db, budget)?;
    let side1 = hom_map(&restrict_a, &DoubleFunctor::identity(&db), &d2a, &outer_d, &mixed)?
        .after(&l_d);
    let side2 = hom_map(&DoubleFunctor::identity(&d2a), &restrict_b, &d2a, &outer_d2, &mixed)?
        .after(&l_d2);
    Ok(compare_functors(&side1, &side2, "l-extranaturality"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;

    #[test]
    fn l_functor_validates_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let l = l_functor(&mut cache, &unit, &ah, &ah, &budget).unwrap();
        let hom_ab = cache.hom(&ah, &ah, &budget).unwrap();
        let hom_da = cache.hom(&unit, &ah, &budget).unwrap();
        let hom_db = cache.hom(&unit, &ah, &budget).unwrap();
        let outer = cache
            .hom(&hom_da.cat.clone(), &hom_db.cat.clone(), &budget)
            .unwrap();
        l.validate(&hom_ab.cat, &outer.cat).unwrap();
    }

    #[test]
    fn r_functor_validates_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let r = r_functor(&mut cache, &ah, &unit, &ah, &budget).unwrap();
        let hom_ab = cache.hom(&unit, &ah, &budget).unwrap();
        let hom_bd = cache.hom(&ah, &ah, &budget).unwrap();
        let hom_ad = cache.hom(&unit, &ah, &budget).unwrap();
        let outer = cache
            .hom(&hom_bd.cat.clone(), &hom_ad.cat.clone(), &budget)
            .unwrap();
        r.validate(&hom_ab.cat, &outer.cat).unwrap();
    }

    #[test]
    fn identity_checks_hold_for_units() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        assert!(check_l_identity(&mut cache, &unit, &unit, &budget).unwrap().ok);
        assert!(check_r_identity(&mut cache, &unit, &unit, &budget).unwrap().ok);
        assert!(check_f_involution(&mut cache, &unit, &unit, &unit, &budget).unwrap().ok);
    }

    #[test]
    fn l_identity_holds_for_arrow() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let ah = zoo::free_arrow_h();
        let out = check_l_identity(&mut cache, &ah, &ah, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn r_identity_holds_for_arrow() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let ah = zoo::free_arrow_h();
        let unit = zoo::terminal();
        let out = check_r_identity(&mut cache, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_r_identity(&mut cache, &unit, &ah, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn f_involution_holds_for_mixed_arrows() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        let out = check_f_involution(&mut cache, &unit, &ah, &av, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    /// The functor from the terminal double category picking out `o`.
    fn include_point(cat: &FiniteDoubleCategory, o: crate::dbl::ObjId) -> DoubleFunctor {
        DoubleFunctor {
            obj: vec![o],
            h: vec![cat.h_id(o)],
            v: vec![cat.v_id(o)],
            sq: vec![cat.sq_v_id(cat.h_id(o))],
        }
    }

    /// The unique functor into the terminal double category.
    fn collapse(cat: &FiniteDoubleCategory, unit: &FiniteDoubleCategory) -> DoubleFunctor {
        let o = crate::dbl::ObjId(0);
        DoubleFunctor {
            obj: vec![o; cat.objects.len()],
            h: vec![unit.h_id(o); cat.hcells.len()],
            v: vec![unit.v_id(o); cat.vcells.len()],
            sq: vec![unit.sq_v_id(unit.h_id(o)); cat.squares.len()],
        }
    }

    #[test]
    fn l_commutation_holds_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        let out = check_l_commutation(&mut cache, &ah, &unit, &unit, &av, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_l_commutation(&mut cache, &ah, &ah, &unit, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn r_square_holds_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let out = check_r_square(&mut cache, &ah, &unit, &ah, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn lr_pentagon_holds_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let out = check_lr_pentagon(&mut cache, &ah, &unit, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_lr_pentagon(&mut cache, &ah, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn lr_square_holds_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let out = check_lr_square(&mut cache, &unit, &ah, &ah, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_lr_square(&mut cache, &ah, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn l_cartesian_inclusion_holds_on_small_instances() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let out = check_l_cartesian_inclusion(&mut cache, &unit, &ah, &ah, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_l_cartesian_inclusion(&mut cache, &ah, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn l_naturality_holds_along_point_and_collapse() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let incl = include_point(&ah, crate::dbl::ObjId(0));
        incl.validate(&unit, &ah).unwrap();
        let fold = collapse(&ah, &unit);
        fold.validate(&ah, &unit).unwrap();

        let out =
            check_l_natural_contra(&mut cache, &incl, &unit, &ah, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out = check_l_natural_co(&mut cache, &fold, &ah, &unit, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
        let out =
            check_l_extranatural(&mut cache, &incl, &unit, &ah, &ah, &unit, &budget).unwrap();
        assert!(out.ok, "{:?}", out.witness);
    }

    #[test]
    fn fault_injection_reports_witness() {
        let budget = Budget::default();
        let mut cache = HomCache::new();
        let ah = zoo::free_arrow_h();
        let hom = cache.hom(&ah, &ah, &budget).unwrap();
        let id = DoubleFunctor::identity(&hom.cat);
        let mut broken = id.clone();
        // Swap two object assignments to fabricate a mismatching functor.
        broken.obj.swap(0, 1);
        let out = compare_functors(&id, &broken, "fault");
        assert!(!out.ok);
        assert!(out.witness.unwrap().contains("object"));
    }
}

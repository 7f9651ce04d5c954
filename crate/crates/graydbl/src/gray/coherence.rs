//! Comparison maps and coherence checks for the tensor product.
//!
//! The adjunction between `− ⊗ B` and `⟦B, −⟧` has a unit `A → ⟦B, A⊗B⟧`
//! and a counit `⟦B, A⟧ ⊗ B → A`; both are computed here on bounded
//! realizations of the tensors involved. Out of them we build the
//! associativity comparison `⟦A⊗B, K⟧ → ⟦A, ⟦B, K⟧⟧`, the unitors
//! `A⊗𝟙 → A` and `𝟙⊗A → A`, and the braiding `A⊗B → B⊗A`, and we check
//! the coherence identities they satisfy: the counit triangle relating the
//! associativity comparison to the hom-expansion functor, the triangle law
//! for the left unitor, the pentagon, and the hexagon relating the braiding
//! to the hom-transposition functor.
//!
//! Every check needs one or more realized tensors. When a realization does
//! not close within the depth bound the check reports
//! [`Coherence::Skipped`] with the reason instead of failing.

use crate::budget::Budget;
use crate::canonical::{compare_functors, f_functor, l_functor, r_point, CheckOutcome, HomCache};
use crate::dbl::{zoo, FiniteDoubleCategory};
use crate::error::Result;
use crate::functor::DoubleFunctor;
use crate::hom::{hom_map, point_functor, unit_intro};

use super::realize::{
    functor_from_cone, realize_tensor, tensor_functor, Realization, RealizedTensor,
};
use super::{curry_cone, uncurry_functor, TensorCone};

/// Outcome of a coherence check: either an actual comparison, or a report
/// that a required tensor had no bounded realization.
#[derive(Debug)]
pub enum Coherence {
    Checked(CheckOutcome),
    Skipped(String),
}

impl Coherence {
    /// True when the check ran and the two sides agreed.
    pub fn holds(&self) -> bool {
        matches!(self, Coherence::Checked(o) if o.ok)
    }
}

/// A comparison functor out of a realized tensor, or the reason why the
/// tensor could not be realized within the depth bound.
#[derive(Debug)]
pub enum BuiltMap {
    Built(Box<RealizedTensor>, DoubleFunctor),
    Skipped(String),
}

macro_rules! realize_or_skip {
    ($a:expr, $b:expr, $depth:expr, $budget:expr, $skip:expr) => {
        match realize_tensor($a, $b, $depth, $budget)? {
            Realization::Realized(rt) => *rt,
            Realization::Unbounded(why) => return Ok($skip(why)),
        }
    };
}

fn all_of(outcomes: Vec<CheckOutcome>) -> CheckOutcome {
    outcomes
        .into_iter()
        .find(|o| !o.ok)
        .unwrap_or_else(CheckOutcome::pass)
}

/// The unit `A → ⟦B, A⊗B⟧` of the pairing adjunction, computed by currying
/// the tautological cone of a realization of `A ⊗ B`.
pub fn unit_eta(
    cache: &mut HomCache,
    rt: &RealizedTensor,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let hom_bt = cache.hom(&rt.cone.b, &rt.category, budget)?;
    curry_cone(&rt.cone, &hom_bt)
}

/// The evaluation cone over `(⟦B, A⟧, B)` with values in `A`: the identity
/// of `⟦B, A⟧` uncurried.
pub fn counit_cone(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<TensorCone> {
    let hom_ba = cache.hom(b, a, budget)?;
    uncurry_functor(
        &DoubleFunctor::identity(&hom_ba.cat),
        &hom_ba.cat,
        b,
        a,
        &hom_ba,
    )
}

/// The counit `⟦B, A⟧ ⊗ B → A` of the pairing adjunction, out of the given
/// realization of `⟦B, A⟧ ⊗ B`.
pub fn counit_epsilon(
    cache: &mut HomCache,
    rt_eps: &RealizedTensor,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let cone = counit_cone(cache, a, b, budget)?;
    functor_from_cone(rt_eps, &cone)
}

/// The associativity comparison `⟦A⊗B, K⟧ → ⟦A, ⟦B, K⟧⟧` induced by a
/// realization of `A ⊗ B`: the hom-expansion along `B` followed by
/// restriction along the unit.
pub fn assoc_hom_map(
    cache: &mut HomCache,
    rt: &RealizedTensor,
    k: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<DoubleFunctor> {
    let a = &rt.cone.a;
    let b = &rt.cone.b;
    let t = &rt.category;
    let eta = unit_eta(cache, rt, budget)?;
    let expand = l_functor(cache, b, t, k, budget)?;
    let hom_bt = cache.hom(b, t, budget)?;
    let hom_bk = cache.hom(b, k, budget)?;
    let hom_outer = cache.hom(&hom_bt.cat, &hom_bk.cat, budget)?;
    let hom_a_bk = cache.hom(a, &hom_bk.cat, budget)?;
    let restrict = hom_map(
        &eta,
        &DoubleFunctor::identity(&hom_bk.cat),
        a,
        &hom_outer,
        &hom_a_bk,
    )?;
    Ok(restrict.after(&expand))
}

/// The cone over `(𝟙, A)` with values in `C` induced by a functor
/// `f : A → C`: `A` is evaluated through `f` and the unit contributes only
/// identity cells.
pub fn unit_left_cone(
    a: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    f: &DoubleFunctor,
) -> TensorCone {
    TensorCone {
        a: zoo::terminal(),
        b: a.clone(),
        c: c.clone(),
        obj_obj: vec![f.obj.clone()],
        obj_h: vec![f.h.clone()],
        obj_v: vec![f.v.clone()],
        obj_sq: vec![f.sq.clone()],
        h_obj: vec![a.obj_ids().map(|y| c.h_id(f.obj(y))).collect()],
        v_obj: vec![a.obj_ids().map(|y| c.v_id(f.obj(y))).collect()],
        sq_obj: vec![a
            .obj_ids()
            .map(|y| c.sq_v_id(c.h_id(f.obj(y))))
            .collect()],
        h_v: vec![a.v_ids().map(|q| c.sq_h_id(f.v(q))).collect()],
        v_h: vec![a.h_ids().map(|p| c.sq_v_id(f.h(p))).collect()],
        h_h: vec![a.h_ids().map(|p| c.sq_v_id(f.h(p))).collect()],
        h_h_inv: vec![a.h_ids().map(|p| c.sq_v_id(f.h(p))).collect()],
        v_v: vec![a.v_ids().map(|q| c.sq_h_id(f.v(q))).collect()],
        v_v_inv: vec![a.v_ids().map(|q| c.sq_h_id(f.v(q))).collect()],
    }
}

/// The cone over `(A, 𝟙)` with values in `C` induced by a functor
/// `f : A → C`.
pub fn unit_right_cone(
    a: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    f: &DoubleFunctor,
) -> TensorCone {
    super::transpose_cone(&unit_left_cone(a, c, f))
}

/// The right unitor `A ⊗ 𝟙 → A`: evaluation of the cone induced by the
/// identity of `A`.
pub fn right_unitor(a: &FiniteDoubleCategory, depth: usize, budget: &Budget) -> Result<BuiltMap> {
    let unit = zoo::terminal();
    let rt = realize_or_skip!(a, &unit, depth, budget, BuiltMap::Skipped);
    let map = functor_from_cone(&rt, &unit_right_cone(a, a, &DoubleFunctor::identity(a)))?;
    Ok(BuiltMap::Built(Box::new(rt), map))
}

/// The left unitor `𝟙 ⊗ A → A`: evaluation of the cone induced by the
/// identity of `A`.
pub fn left_unitor(a: &FiniteDoubleCategory, depth: usize, budget: &Budget) -> Result<BuiltMap> {
    let unit = zoo::terminal();
    let rt = realize_or_skip!(&unit, a, depth, budget, BuiltMap::Skipped);
    let map = functor_from_cone(&rt, &unit_left_cone(a, a, &DoubleFunctor::identity(a)))?;
    Ok(BuiltMap::Built(Box::new(rt), map))
}

/// The braiding `A ⊗ B → B ⊗ A`: evaluation of the transposed tautological
/// cone of a realization of `B ⊗ A`.
pub fn braiding(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<BuiltMap> {
    let rt_ab = realize_or_skip!(a, b, depth, budget, BuiltMap::Skipped);
    let rt_ba = realize_or_skip!(b, a, depth, budget, BuiltMap::Skipped);
    let map = functor_from_cone(&rt_ab, &super::transpose_cone(&rt_ba.cone))?;
    Ok(BuiltMap::Built(Box::new(rt_ab), map))
}

/// The braiding computed from the adjunction data instead of by
/// transposition: send `A` into `⟦B, B⊗A⟧` through the point-evaluation
/// functor restricted along the unit, tensor with `B`, and evaluate with
/// the counit. Agrees with [`braiding`] but needs a bounded realization of
/// `⟦B, B⊗A⟧ ⊗ B`, which only small instances admit.
pub fn braiding_from_counit(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<BuiltMap> {
    let rt_ab = realize_or_skip!(a, b, depth, budget, BuiltMap::Skipped);
    let rt_ba = realize_or_skip!(b, a, depth, budget, BuiltMap::Skipped);
    let t = rt_ba.category.clone();
    // u : A → ⟦B, B⊗A⟧, the point evaluation of `A` restricted along the
    // unit `B → ⟦A, B⊗A⟧`.
    let point = r_point(cache, a, &t, budget)?;
    let eta = unit_eta(cache, &rt_ba, budget)?;
    let hom_at = cache.hom(a, &t, budget)?;
    let hom_inner = cache.hom(&hom_at.cat, &t, budget)?;
    let hom_bt = cache.hom(b, &t, budget)?;
    let restrict = hom_map(&eta, &DoubleFunctor::identity(&t), b, &hom_inner, &hom_bt)?;
    let u = restrict.after(&point);
    let rt_eps = realize_or_skip!(&hom_bt.cat, b, depth, budget, BuiltMap::Skipped);
    let eps = counit_epsilon(cache, &rt_eps, &t, b, budget)?;
    let tf = tensor_functor(&rt_ab, &rt_eps, &u, &DoubleFunctor::identity(b))?;
    Ok(BuiltMap::Built(Box::new(rt_ab), eps.after(&tf)))
}

fn is_bijection(map: impl ExactSizeIterator<Item = usize>, cod_len: usize) -> bool {
    if map.len() != cod_len {
        return false;
    }
    let mut seen = vec![false; cod_len];
    for i in map {
        if seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// Whether a functor is invertible: all four component maps are bijections.
pub fn is_isomorphism(f: &DoubleFunctor, cod: &FiniteDoubleCategory) -> bool {
    is_bijection(f.obj.iter().map(|x| x.0), cod.objects.len())
        && is_bijection(f.h.iter().map(|x| x.0), cod.hcells.len())
        && is_bijection(f.v.iter().map(|x| x.0), cod.vcells.len())
        && is_bijection(f.sq.iter().map(|x| x.0), cod.squares.len())
}

/// Both triangle laws of the pairing adjunction for the pair `(A, B)`:
/// evaluating after tensoring with the unit is the identity of `A ⊗ B`, and
/// the unit of `⟦B, A⟧` followed by post-composition with the counit is the
/// identity of `⟦B, A⟧`.
pub fn check_adjunction_triangles(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<Coherence> {
    let rt = realize_or_skip!(a, b, depth, budget, Coherence::Skipped);
    let t = rt.category.clone();
    let eta = unit_eta(cache, &rt, budget)?;

    // (1)  ε ∘ (η ⊗ 1) = 1 on A ⊗ B.
    let hom_bt = cache.hom(b, &t, budget)?;
    let rt_eps_t = realize_or_skip!(&hom_bt.cat, b, depth, budget, Coherence::Skipped);
    let eps_t = counit_epsilon(cache, &rt_eps_t, &t, b, budget)?;
    let tf = tensor_functor(&rt, &rt_eps_t, &eta, &DoubleFunctor::identity(b))?;
    let first = compare_functors(
        &eps_t.after(&tf),
        &DoubleFunctor::identity(&t),
        "counit after tensored unit",
    );

    // (2)  ⟦1, ε⟧ ∘ η = 1 on ⟦B, A⟧.
    let hom_ba = cache.hom(b, a, budget)?;
    let rt_e = realize_or_skip!(&hom_ba.cat, b, depth, budget, Coherence::Skipped);
    let e = rt_e.category.clone();
    let eta_e = unit_eta(cache, &rt_e, budget)?;
    let eps = counit_epsilon(cache, &rt_e, a, b, budget)?;
    let hom_be = cache.hom(b, &e, budget)?;
    let post = hom_map(&DoubleFunctor::identity(b), &eps, b, &hom_be, &hom_ba)?;
    let second = compare_functors(
        &post.after(&eta_e),
        &DoubleFunctor::identity(&hom_ba.cat),
        "postcomposed counit after unit",
    );

    Ok(Coherence::Checked(all_of(vec![first, second])))
}

/// The counit triangle: for `⟦C, P⟧ ⊗ C` realized with counit `ε`, the
/// hom-expansion `⟦P, K⟧ → ⟦⟦C, P⟧, ⟦C, K⟧⟧` factors as restriction along
/// `ε` followed by the associativity comparison.
pub fn check_counit_triangle(
    cache: &mut HomCache,
    c: &FiniteDoubleCategory,
    p: &FiniteDoubleCategory,
    k: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<Coherence> {
    let hom_cp = cache.hom(c, p, budget)?;
    let rt = realize_or_skip!(&hom_cp.cat, c, depth, budget, Coherence::Skipped);
    let t = rt.category.clone();
    let eps = counit_epsilon(cache, &rt, p, c, budget)?;

    let lhs = l_functor(cache, c, p, k, budget)?;

    let hom_pk = cache.hom(p, k, budget)?;
    let hom_tk = cache.hom(&t, k, budget)?;
    let restrict = hom_map(&eps, &DoubleFunctor::identity(k), &t, &hom_pk, &hom_tk)?;
    let assoc = assoc_hom_map(cache, &rt, k, budget)?;

    Ok(Coherence::Checked(compare_functors(
        &lhs,
        &assoc.after(&restrict),
        "hom-expansion vs associativity after counit restriction",
    )))
}

/// The triangle law for the left unitor: restriction along `λ : 𝟙⊗B → B`
/// followed by the associativity comparison of `𝟙 ⊗ B` is the canonical
/// inclusion `⟦B, K⟧ → ⟦𝟙, ⟦B, K⟧⟧`, and the associativity comparisons of
/// `𝟙 ⊗ B` and `⟦B, B⟧ ⊗ B` commute with restriction along the identity
/// point.
pub fn check_triangle(
    cache: &mut HomCache,
    b: &FiniteDoubleCategory,
    k: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<Coherence> {
    let unit = zoo::terminal();
    let rt1 = realize_or_skip!(&unit, b, depth, budget, Coherence::Skipped);
    let hom_bb = cache.hom(b, b, budget)?;
    let rt_bb = realize_or_skip!(&hom_bb.cat, b, depth, budget, Coherence::Skipped);

    let eps = counit_epsilon(cache, &rt_bb, b, b, budget)?;
    let point = point_functor(&hom_bb, &DoubleFunctor::identity(b))?;
    let incl = tensor_functor(&rt1, &rt_bb, &point, &DoubleFunctor::identity(b))?;
    let lambda = eps.after(&incl);

    // The counit presentation of the unitor agrees with direct evaluation.
    let direct = functor_from_cone(&rt1, &unit_left_cone(b, b, &DoubleFunctor::identity(b)))?;
    let presentations = compare_functors(
        &lambda,
        &direct,
        "unitor triangle, counit presentation of the unitor",
    );

    // Outer triangle.
    let t1 = rt1.category.clone();
    let hom_bk = cache.hom(b, k, budget)?;
    let hom_t1k = cache.hom(&t1, k, budget)?;
    let restrict_lambda = hom_map(&lambda, &DoubleFunctor::identity(k), &t1, &hom_bk, &hom_t1k)?;
    let assoc1 = assoc_hom_map(cache, &rt1, k, budget)?;
    let hom_unit_bk = cache.hom(&unit, &hom_bk.cat, budget)?;
    let canonical = unit_intro(&hom_bk.cat, &hom_unit_bk)?;
    let outer = compare_functors(
        &canonical,
        &assoc1.after(&restrict_lambda),
        "unitor triangle, outer cell",
    );

    // Naturality square between the two associativity comparisons.
    let tb = rt_bb.category.clone();
    let hom_tbk = cache.hom(&tb, k, budget)?;
    let restrict_incl = hom_map(&incl, &DoubleFunctor::identity(k), &t1, &hom_tbk, &hom_t1k)?;
    let assoc_bb = assoc_hom_map(cache, &rt_bb, k, budget)?;
    let hom_bb_bk = cache.hom(&hom_bb.cat, &hom_bk.cat, budget)?;
    let restrict_point = hom_map(
        &point,
        &DoubleFunctor::identity(&hom_bk.cat),
        &unit,
        &hom_bb_bk,
        &hom_unit_bk,
    )?;
    let square = compare_functors(
        &assoc1.after(&restrict_incl),
        &restrict_point.after(&assoc_bb),
        "unitor triangle, naturality square",
    );

    Ok(Coherence::Checked(all_of(vec![presentations, outer, square])))
}

/// The pentagon: the two ways of iterating the associativity comparison
/// from `⟦A⊗(B⊗C), K⟧` to `⟦A, ⟦B, ⟦C, K⟧⟧⟧` agree — directly through
/// `B⊗C`, or through `(A⊗B)⊗C` after restricting along the comparison
/// functor `(A⊗B)⊗C → A⊗(B⊗C)` built from counits.
pub fn check_pentagon(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    k: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<Coherence> {
    let rt_bc = realize_or_skip!(b, c, depth, budget, Coherence::Skipped);
    let bc = rt_bc.category.clone();
    let rt_t = realize_or_skip!(a, &bc, depth, budget, Coherence::Skipped);
    let t = rt_t.category.clone();
    let rt_ab = realize_or_skip!(a, b, depth, budget, Coherence::Skipped);
    let ab = rt_ab.category.clone();
    let rt_abc = realize_or_skip!(&ab, c, depth, budget, Coherence::Skipped);
    let abc = rt_abc.category.clone();

    // One leg: associate through B⊗C.
    let assoc_t = assoc_hom_map(cache, &rt_t, k, budget)?;
    let assoc_bc = assoc_hom_map(cache, &rt_bc, k, budget)?;
    let hom_bck = cache.hom(&bc, k, budget)?;
    let hom_ck = cache.hom(c, k, budget)?;
    let hom_b_ck = cache.hom(b, &hom_ck.cat, budget)?;
    let hom_a_bck = cache.hom(a, &hom_bck.cat, budget)?;
    let hom_a_b_ck = cache.hom(a, &hom_b_ck.cat, budget)?;
    let post_assoc = hom_map(
        &DoubleFunctor::identity(a),
        &assoc_bc,
        a,
        &hom_a_bck,
        &hom_a_b_ck,
    )?;
    let lhs = post_assoc.after(&assoc_t);

    // Other leg: restriction along the chain of counits and units from
    // ⟦T, K⟧ to ⟦(A⊗B)⊗C, K⟧, then associate twice.
    let hom_ct = cache.hom(c, &t, budget)?;
    let rt_e1 = realize_or_skip!(&hom_ct.cat, c, depth, budget, Coherence::Skipped);
    let e1 = rt_e1.category.clone();
    let eps_c = counit_epsilon(cache, &rt_e1, &t, c, budget)?;
    let hom_tk = cache.hom(&t, k, budget)?;
    let hom_e1k = cache.hom(&e1, k, budget)?;
    let m1 = hom_map(&eps_c, &DoubleFunctor::identity(k), &e1, &hom_tk, &hom_e1k)?;

    let hom_b_ct = cache.hom(b, &hom_ct.cat, budget)?;
    let rt_e2 = realize_or_skip!(&hom_b_ct.cat, b, depth, budget, Coherence::Skipped);
    let e2 = rt_e2.category.clone();
    let eps_b = counit_epsilon(cache, &rt_e2, &hom_ct.cat, b, budget)?;
    let rt_e2c = realize_or_skip!(&e2, c, depth, budget, Coherence::Skipped);
    let e2c = rt_e2c.category.clone();
    let g1 = tensor_functor(&rt_e2c, &rt_e1, &eps_b, &DoubleFunctor::identity(c))?;
    let hom_e2ck = cache.hom(&e2c, k, budget)?;
    let m2 = hom_map(&g1, &DoubleFunctor::identity(k), &e2c, &hom_e1k, &hom_e2ck)?;

    let assoc_inner = assoc_hom_map(cache, &rt_bc, &t, budget)?;
    let hom_bct = cache.hom(&bc, &t, budget)?;
    let rt_e3 = realize_or_skip!(&hom_bct.cat, b, depth, budget, Coherence::Skipped);
    let e3 = rt_e3.category.clone();
    let g2 = tensor_functor(&rt_e3, &rt_e2, &assoc_inner, &DoubleFunctor::identity(b))?;
    let rt_e3c = realize_or_skip!(&e3, c, depth, budget, Coherence::Skipped);
    let e3c = rt_e3c.category.clone();
    let g3 = tensor_functor(&rt_e3c, &rt_e2c, &g2, &DoubleFunctor::identity(c))?;
    let hom_e3ck = cache.hom(&e3c, k, budget)?;
    let m3 = hom_map(&g3, &DoubleFunctor::identity(k), &e3c, &hom_e2ck, &hom_e3ck)?;

    let eta = unit_eta(cache, &rt_t, budget)?;
    let g4 = tensor_functor(&rt_ab, &rt_e3, &eta, &DoubleFunctor::identity(b))?;
    let g5 = tensor_functor(&rt_abc, &rt_e3c, &g4, &DoubleFunctor::identity(c))?;
    let hom_abck = cache.hom(&abc, k, budget)?;
    let m4 = hom_map(&g5, &DoubleFunctor::identity(k), &abc, &hom_e3ck, &hom_abck)?;

    let assoc_outer = assoc_hom_map(cache, &rt_abc, k, budget)?;
    let assoc_ab = assoc_hom_map(cache, &rt_ab, &hom_ck.cat, budget)?;
    let rhs = assoc_ab
        .after(&assoc_outer)
        .after(&m4)
        .after(&m3)
        .after(&m2)
        .after(&m1);

    Ok(Coherence::Checked(compare_functors(
        &lhs,
        &rhs,
        "pentagon",
    )))
}

/// The hexagon: restricting along the braiding `A⊗C → C⊗A`, associating,
/// and transposing the two hom variables agrees with the associativity
/// comparison of `C ⊗ A` directly, as functors
/// `⟦C⊗A, K⟧ → ⟦C, ⟦A, K⟧⟧`.
pub fn check_hexagon(
    cache: &mut HomCache,
    a: &FiniteDoubleCategory,
    c: &FiniteDoubleCategory,
    k: &FiniteDoubleCategory,
    depth: usize,
    budget: &Budget,
) -> Result<Coherence> {
    let rt_ca = match realize_tensor(c, a, depth, budget)? {
        Realization::Realized(rt) => *rt,
        Realization::Unbounded(why) => return Ok(Coherence::Skipped(why)),
    };
    let t = rt_ca.category.clone();
    let (rt_ac, phi) = match braiding(a, c, depth, budget)? {
        BuiltMap::Built(rt, map) => (rt, map),
        BuiltMap::Skipped(why) => return Ok(Coherence::Skipped(why)),
    };
    let ac = rt_ac.category.clone();

    let hom_tk = cache.hom(&t, k, budget)?;
    let hom_ack = cache.hom(&ac, k, budget)?;
    let restrict_phi = hom_map(&phi, &DoubleFunctor::identity(k), &ac, &hom_tk, &hom_ack)?;
    let assoc_ac = assoc_hom_map(cache, &rt_ac, k, budget)?;
    let transpose = f_functor(cache, k, a, c, budget)?;
    let lhs = transpose.after(&assoc_ac).after(&restrict_phi);

    let rhs = assoc_hom_map(cache, &rt_ca, k, budget)?;

    Ok(Coherence::Checked(compare_functors(
        &lhs,
        &rhs,
        "hexagon",
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::iso::is_isomorphic;

    fn big_budget() -> Budget {
        Budget::new(2_000_000_000)
    }

    #[test]
    fn adjunction_triangles_hold() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        for (a, b) in [(&unit, &unit), (&ah, &unit), (&unit, &ah)] {
            let out = check_adjunction_triangles(&mut cache, a, b, 3, &budget).unwrap();
            assert!(out.holds(), "{out:?}");
        }
    }

    #[test]
    fn unitors_are_isomorphisms_onto_the_factor() {
        let budget = big_budget();
        for d in [zoo::terminal(), zoo::free_arrow_h(), zoo::generator()] {
            for built in [
                right_unitor(&d, 2, &budget).unwrap(),
                left_unitor(&d, 2, &budget).unwrap(),
            ] {
                match built {
                    BuiltMap::Built(rt, map) => {
                        assert!(is_isomorphism(&map, &d));
                        assert!(is_isomorphic(&rt.category, &d));
                    }
                    BuiltMap::Skipped(why) => panic!("unexpectedly skipped: {why}"),
                }
            }
        }
    }

    #[test]
    fn braiding_is_an_involutive_isomorphism() {
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        for (a, b) in [(&ah, &unit), (&unit, &ah), (&ah, &av), (&ah, &ah)] {
            let (rt_ab, phi) = match braiding(a, b, 2, &budget).unwrap() {
                BuiltMap::Built(rt, map) => (rt, map),
                BuiltMap::Skipped(why) => panic!("unexpectedly skipped: {why}"),
            };
            let (rt_ba, psi) = match braiding(b, a, 2, &budget).unwrap() {
                BuiltMap::Built(rt, map) => (rt, map),
                BuiltMap::Skipped(why) => panic!("unexpectedly skipped: {why}"),
            };
            let round = psi.after(&phi);
            let there = compare_functors(
                &round,
                &DoubleFunctor::identity(&rt_ab.category),
                "braiding round trip",
            );
            assert!(there.ok, "{:?}", there.witness);
            let back = compare_functors(
                &phi.after(&psi),
                &DoubleFunctor::identity(&rt_ba.category),
                "braiding round trip, reversed",
            );
            assert!(back.ok, "{:?}", back.witness);
        }
    }

    #[test]
    fn braiding_agrees_with_its_counit_presentation() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        for (a, b) in [(&ah, &unit), (&unit, &ah)] {
            let direct = match braiding(a, b, 3, &budget).unwrap() {
                BuiltMap::Built(_, map) => map,
                BuiltMap::Skipped(why) => panic!("unexpectedly skipped: {why}"),
            };
            let via_counit = match braiding_from_counit(&mut cache, a, b, 3, &budget).unwrap() {
                BuiltMap::Built(_, map) => map,
                BuiltMap::Skipped(why) => panic!("unexpectedly skipped: {why}"),
            };
            let out = compare_functors(&direct, &via_counit, "braiding presentations");
            assert!(out.ok, "{:?}", out.witness);
        }
    }

    #[test]
    fn counit_triangle_holds() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let g = zoo::generator();
        for (c, p, k) in [
            (&unit, &unit, &unit),
            (&unit, &ah, &g),
            (&ah, &unit, &unit),
        ] {
            let out = check_counit_triangle(&mut cache, c, p, k, 3, &budget).unwrap();
            assert!(out.holds(), "{out:?}");
        }
    }

    #[test]
    fn hexagon_holds() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let g = zoo::generator();
        for (a, c, k) in [(&unit, &unit, &unit), (&ah, &unit, &g), (&unit, &ah, &ah)] {
            let out = check_hexagon(&mut cache, a, c, k, 3, &budget).unwrap();
            assert!(out.holds(), "{out:?}");
        }
    }

    #[test]
    fn pentagon_holds_for_units() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let out = check_pentagon(&mut cache, &unit, &unit, &unit, &unit, 3, &budget).unwrap();
        assert!(out.holds(), "{out:?}");
    }

    #[test]
    fn pentagon_holds_for_a_mixed_instance() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let g = zoo::generator();
        let out = check_pentagon(&mut cache, &ah, &unit, &unit, &g, 3, &budget).unwrap();
        assert!(out.holds(), "{out:?}");
    }

    #[test]
    fn triangle_holds_for_a_mixed_instance() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let out = check_triangle(&mut cache, &unit, &ah, 3, &budget).unwrap();
        assert!(out.holds(), "{out:?}");
    }

    #[test]
    fn triangle_holds_for_units() {
        let mut cache = HomCache::new();
        let budget = big_budget();
        let unit = zoo::terminal();
        let out = check_triangle(&mut cache, &unit, &unit, 2, &budget).unwrap();
        assert!(out.holds(), "{out:?}");
    }
}

//! The 2-functor `ℓ: [A, B] → [[C, A], [C, B]]` sending a 2-functor `F` to
//! "compose with `F` after evaluation": its value at an object `φ: C → A` is
//! `F ∘ φ`, at a pseudonatural transformation it whiskers, and a
//! pseudonatural transformation `ψ: F → G` goes to the transformation whose
//! component at `φ` is `ψφ` and whose component at a 1-cell `χ: φ → φ'` is
//! the 2-cell `ψ_{χ_-}`.
//!
//! This cannot be obtained by restricting the double-category-level `ℓ`: the
//! double hom `⟦C, A⟧` has non-identity vertical pseudotransformations, so
//! its horizontal 2-category is not `[C, A]`'s codomain shape. Instead the
//! construction is carried out natively on the embeddings, cell by cell.

use crate::budget::Budget;
use crate::dbl::category::{SqId, VId};
use crate::error::Result;
use crate::functor::DoubleFunctor;
use crate::hom::{
    compose_hpseudo, hpseudo_postcompose, hpseudo_precompose, identity_vpseudo,
    modification_postcompose, modification_precompose, HPseudo, Modification,
};
use crate::two::hom2::{Hom2, TwoFunctor};
use crate::two::{Finite2Category, OneId};

/// The liftings of the cells of `[A, B]` to cells between the embeddings of
/// `[C, A]` and `[C, B]`, shared by the object/1-cell/2-cell maps.
struct Lift<'a> {
    hom_ca: &'a Hom2,
    hom_cb: &'a Hom2,
    /// `embed([C, A])` and `embed([C, B])` (the domains of the outer hom).
    d_hca: &'a crate::dbl::category::FiniteDoubleCategory,
    d_hcb: &'a crate::dbl::category::FiniteDoubleCategory,
}

impl Lift<'_> {
    fn dc(&self) -> &crate::dbl::category::FiniteDoubleCategory {
        &self.hom_ca.dom
    }
    fn db(&self) -> &crate::dbl::category::FiniteDoubleCategory {
        &self.hom_cb.cod
    }

    /// The square of `embed([C, B])` behind a hom-category square.
    fn sq(&self, s: SqId) -> Result<SqId> {
        Ok(SqId(self.hom_cb.two_of_sq(s)?.0))
    }

    /// `F ↦ ⟦1, F⟧`, acting on `[C, A]` by postcomposition.
    fn functor(&self, f: &DoubleFunctor) -> Result<DoubleFunctor> {
        let mut obj = Vec::new();
        for phi in &self.hom_ca.inner.functors {
            obj.push(self.hom_cb.inner.find_functor(&f.after(phi))?);
        }
        let mut h = Vec::new();
        for x in &self.hom_ca.inner.hpseudos {
            h.push(self.hom_cb.inner.find_hpseudo(&hpseudo_postcompose(x, f))?);
        }
        let v = obj.iter().map(|o| VId(o.0)).collect();
        let mut sq = Vec::new();
        for &s in &self.hom_ca.h2.sq_of_two {
            let m = &self.hom_ca.inner.mods[s.0];
            sq.push(self.sq(self.hom_cb.inner.find_mod(&modification_postcompose(m, f))?)?);
        }
        Ok(DoubleFunctor { obj, h, v, sq })
    }

    /// `ψ ↦ ⟦1, ψ⟧` for a pseudonatural transformation `ψ: F → G` of
    /// `[A, B]`: components are whiskerings, and the component at a 1-cell
    /// `χ: φ → φ'` of `[C, A]` is the modification with entries `ψ^{χ_c}`.
    fn hpseudo(&self, x: &HPseudo) -> Result<HPseudo> {
        let source = self.functor(&x.source)?;
        let target = self.functor(&x.target)?;
        let mut comp_obj = Vec::new();
        for phi in &self.hom_ca.inner.functors {
            comp_obj.push(
                self.hom_cb
                    .inner
                    .find_hpseudo(&hpseudo_precompose(x, phi, self.dc()))?,
            );
        }
        let comp_v: Vec<SqId> = comp_obj.iter().map(|&h| self.d_hcb.sq_v_id(h)).collect();
        let mut comp_h = Vec::new();
        let mut comp_h_inv = Vec::new();
        for chi in &self.hom_ca.inner.hpseudos {
            let (phi, phi2) = (&chi.source, &chi.target);
            let top = compose_hpseudo(
                self.dc(),
                self.db(),
                &hpseudo_postcompose(chi, &x.source),
                &hpseudo_precompose(x, phi2, self.dc()),
            );
            let bottom = compose_hpseudo(
                self.dc(),
                self.db(),
                &hpseudo_precompose(x, phi, self.dc()),
                &hpseudo_postcompose(chi, &x.target),
            );
            let left = identity_vpseudo(self.dc(), self.db(), &x.source.after(phi));
            let right = identity_vpseudo(self.dc(), self.db(), &x.target.after(phi2));
            let comp: Vec<SqId> = self
                .dc()
                .obj_ids()
                .map(|c| x.comp_h[chi.comp_obj[c.0].0])
                .collect();
            let comp_inv: Vec<SqId> = self
                .dc()
                .obj_ids()
                .map(|c| x.comp_h_inv[chi.comp_obj[c.0].0])
                .collect();
            let fwd = Modification {
                top: top.clone(),
                left: left.clone(),
                bottom: bottom.clone(),
                right: right.clone(),
                comp,
            };
            let bwd = Modification { top: bottom, left, bottom: top, right, comp: comp_inv };
            comp_h.push(self.sq(self.hom_cb.inner.find_mod(&fwd)?)?);
            comp_h_inv.push(self.sq(self.hom_cb.inner.find_mod(&bwd)?)?);
        }
        Ok(HPseudo { source, target, comp_obj, comp_v, comp_h, comp_h_inv })
    }

    /// `ω ↦ ⟦1, ω⟧` for an identity-framed modification of `[A, B]`: the
    /// component at `φ` is the whiskered modification `ωφ`.
    fn modification(&self, m: &Modification) -> Result<Modification> {
        let top = self.hpseudo(&m.top)?;
        let bottom = self.hpseudo(&m.bottom)?;
        let left = identity_vpseudo(self.d_hca, self.d_hcb, &top.source);
        let right = identity_vpseudo(self.d_hca, self.d_hcb, &top.target);
        let mut comp = Vec::new();
        for phi in &self.hom_ca.inner.functors {
            comp.push(self.sq(
                self.hom_cb
                    .inner
                    .find_mod(&modification_precompose(m, phi, self.dc()))?,
            )?);
        }
        Ok(Modification { top, left, bottom, right, comp })
    }
}

/// Build `ℓ: [A, B] → [[C, A], [C, B]]` from prebuilt hom 2-categories.
///
/// `hom_ab`, `hom_ca`, `hom_cb` must be the hom 2-categories over the
/// embeddings of `A, B, C`, and `outer` must be the hom 2-category of
/// (`hom_ca.cat()`, `hom_cb.cat()`).
pub fn l2_core(hom_ab: &Hom2, hom_ca: &Hom2, hom_cb: &Hom2, outer: &Hom2) -> Result<TwoFunctor> {
    let lift = Lift { hom_ca, hom_cb, d_hca: &outer.dom, d_hcb: &outer.cod };
    let mut obj = Vec::new();
    for f in &hom_ab.inner.functors {
        obj.push(outer.inner.find_functor(&lift.functor(f)?)?);
    }
    let mut one = Vec::new();
    for x in &hom_ab.inner.hpseudos {
        one.push(OneId(outer.inner.find_hpseudo(&lift.hpseudo(x)?)?.0));
    }
    let mut two = Vec::new();
    for t in hom_ab.cat().two_ids() {
        let m = hom_ab.mod_of_two(t);
        two.push(outer.two_of_sq(outer.inner.find_mod(&lift.modification(m)?)?)?);
    }
    Ok(TwoFunctor { obj, one, two })
}

/// `ℓ` with everything it was built from, for further checks.
pub struct L2 {
    pub functor: TwoFunctor,
    pub hom_ab: Hom2,
    pub hom_ca: Hom2,
    pub hom_cb: Hom2,
    pub outer: Hom2,
}

/// Build `ℓ: [A, B] → [[C, A], [C, B]]` for 2-categories, validated.
pub fn l2_functor(
    c: &Finite2Category,
    a: &Finite2Category,
    b: &Finite2Category,
    budget: &Budget,
) -> Result<L2> {
    let hom_ab = Hom2::build2(a, b, budget)?;
    let hom_ca = Hom2::build2(c, a, budget)?;
    let hom_cb = Hom2::build2(c, b, budget)?;
    let outer = Hom2::build2(hom_ca.cat(), hom_cb.cat(), budget)?;
    let functor =
        l2_core(&hom_ab, &hom_ca, &hom_cb, &outer)?.validated(hom_ab.cat(), outer.cat())?;
    Ok(L2 { functor, hom_ab, hom_ca, hom_cb, outer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::category::HId;
    use crate::two::hom2::two_hom_map;
    use crate::two::{arrow2, embed, is_isomorphic2, terminal2};

    fn budget() -> Budget {
        Budget::new(500_000_000)
    }

    #[test]
    fn l2_preserves_the_identity_object() {
        let a = arrow2();
        let l2 = l2_functor(&terminal2(), &a, &a, &budget()).unwrap();
        let da = embed(&a);
        let id_idx = l2
            .hom_ab
            .inner
            .find_functor(&DoubleFunctor::identity(&da))
            .unwrap();
        let expected = l2
            .outer
            .inner
            .find_functor(&DoubleFunctor::identity(&l2.outer.dom))
            .unwrap();
        assert_eq!(l2.functor.obj[id_idx.0], expected);
    }

    #[test]
    fn l2_with_terminal_first_argument_collapses_to_a_hom_equivalence() {
        // With C = 1, [C, A] ≅ A and ℓ becomes the canonical equivalence
        // [A, B] → [[1, A], [1, B]]; in particular it is bijective on all
        // three cell kinds.
        let (a, b) = (arrow2(), arrow2());
        let l2 = l2_functor(&terminal2(), &a, &b, &budget()).unwrap();
        assert!(is_isomorphic2(l2.hom_ca.cat(), &a));
        let f = &l2.functor;
        fn is_bijection(images: Vec<usize>, n: usize) -> bool {
            let mut sorted = images;
            sorted.sort_unstable();
            sorted == (0..n).collect::<Vec<_>>()
        }
        assert!(is_bijection(
            f.obj.iter().map(|o| o.0).collect(),
            l2.outer.cat().objects.len()
        ));
        assert!(is_bijection(
            f.one.iter().map(|o| o.0).collect(),
            l2.outer.cat().onecells.len()
        ));
        assert!(is_bijection(
            f.two.iter().map(|o| o.0).collect(),
            l2.outer.cat().twocells.len()
        ));
    }

    #[test]
    fn l2_is_compatible_with_the_hom_action() {
        // Naturality in B on a point: for the unique functor q: A → 1,
        // [1, q] ∘ ℓ^C_{A,A} picks composites consistently with ℓ^C_{A,1}.
        let a = arrow2();
        let c = arrow2();
        let l2_aa = l2_functor(&c, &a, &a, &budget()).unwrap();
        let l2_a1 = l2_functor(&c, &a, &terminal2(), &budget()).unwrap();
        let q = {
            let da = embed(&a);
            let d1 = embed(&terminal2());
            DoubleFunctor {
                obj: da.obj_ids().map(|_| crate::dbl::category::ObjId(0)).collect(),
                h: da.h_ids().map(|_| HId(0)).collect(),
                v: da.v_ids().map(|_| VId(0)).collect(),
                sq: da.sq_ids().map(|_| SqId(0)).collect(),
            }
            .validated(&da, &d1)
            .unwrap()
        };
        let id_a = DoubleFunctor::identity(&embed(&a));
        // [1, q]: [A, A] → [A, 1]
        let hom_q = two_hom_map(&id_a, &q, &l2_aa.hom_ab, &l2_a1.hom_ab).unwrap();
        // [1, [1, q]]: [[C,A],[C,A]] → [[C,A],[C,1]]
        let inner_q = two_hom_map(
            &DoubleFunctor::identity(&l2_aa.outer.dom),
            &two_hom_map(
                &DoubleFunctor::identity(&embed(&c)),
                &q,
                &l2_aa.hom_cb,
                &l2_a1.hom_cb,
            )
            .unwrap()
            .to_double(),
            &l2_aa.outer,
            &l2_a1.outer,
        )
        .unwrap();
        assert_eq!(
            inner_q.after(&l2_aa.functor),
            l2_a1.functor.after(&hom_q)
        );
    }
}

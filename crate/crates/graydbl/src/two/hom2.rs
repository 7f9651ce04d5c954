//! The hom 2-category `[A, B]` of 2-functors, pseudonatural transformations
//! and modifications.
//!
//! Everything is derived from the double-category hom: a 2-functor between
//! 2-categories is exactly a double functor between their embeddings, a
//! pseudonatural transformation is exactly a horizontal pseudotransformation
//! there (its components at the identity vertical 1-cells are forced), and a
//! modification is a hom-square framed by identity vertical
//! pseudotransformations. So `[A, B]` is the horizontal 2-category of
//! `⟦embed A, embed B⟧`, and [`Hom2`] keeps the dictionaries needed to move
//! between the two views.

use crate::budget::Budget;
use crate::dbl::category::{FiniteDoubleCategory, HId, ObjId, SqId, VId};
use crate::error::{Error, Result};
use crate::functor::DoubleFunctor;
use crate::hom::{build_hom, hom_map, unit_intro, HomDouble};
use crate::two::{embed, horizontal_two_category, Finite2Category, Horizontal2, OneId, TwoId};
use serde::{Deserialize, Serialize};

/// A 2-functor as cell-index maps. Equivalent to a double functor between
/// the embeddings whose vertical map is determined by the object map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFunctor {
    pub obj: Vec<ObjId>,
    pub one: Vec<OneId>,
    pub two: Vec<TwoId>,
}

impl TwoFunctor {
    pub fn identity(dom: &Finite2Category) -> Self {
        TwoFunctor {
            obj: dom.obj_ids().collect(),
            one: dom.one_ids().collect(),
            two: dom.two_ids().collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TwoFunctor) -> Self {
        TwoFunctor {
            obj: first.obj.iter().map(|&a| self.obj[a.0]).collect(),
            one: first.one.iter().map(|&f| self.one[f.0]).collect(),
            two: first.two.iter().map(|&t| self.two[t.0]).collect(),
        }
    }

    /// The same map as a double functor between the embeddings.
    pub fn to_double(&self) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj.clone(),
            h: self.one.iter().map(|f| HId(f.0)).collect(),
            v: self.obj.iter().map(|a| VId(a.0)).collect(),
            sq: self.two.iter().map(|t| SqId(t.0)).collect(),
        }
    }

    /// Reinterpret a double functor between embeddings.
    pub fn from_double(f: &DoubleFunctor) -> Self {
        TwoFunctor {
            obj: f.obj.clone(),
            one: f.h.iter().map(|h| OneId(h.0)).collect(),
            two: f.sq.iter().map(|s| TwoId(s.0)).collect(),
        }
    }

    pub fn validate(
        &self,
        dom: &Finite2Category,
        cod: &Finite2Category,
    ) -> std::result::Result<(), Vec<crate::error::AxiomFailure>> {
        self.to_double().validate(&embed(dom), &embed(cod))
    }

    pub fn validated(self, dom: &Finite2Category, cod: &Finite2Category) -> Result<Self> {
        match self.validate(dom, cod) {
            Ok(()) => Ok(self),
            Err(errs) => Err(Error::Axioms(errs)),
        }
    }
}

/// A hom 2-category `[A, B]` (or, more generally, the horizontal 2-category
/// of `⟦dom, cod⟧` for any double categories), with the underlying
/// double-category hom and the square/2-cell dictionary.
#[derive(Debug, Clone)]
pub struct Hom2 {
    pub dom: FiniteDoubleCategory,
    pub cod: FiniteDoubleCategory,
    pub inner: HomDouble,
    pub h2: Horizontal2,
}

impl Hom2 {
    /// The horizontal 2-category of `⟦dom, cod⟧` for double categories.
    pub fn build(
        dom: &FiniteDoubleCategory,
        cod: &FiniteDoubleCategory,
        budget: &Budget,
    ) -> Result<Hom2> {
        let inner = build_hom(dom, cod, budget)?;
        let h2 = horizontal_two_category(&inner.cat);
        Ok(Hom2 { dom: dom.clone(), cod: cod.clone(), inner, h2 })
    }

    /// The hom 2-category `[a, b]` of two 2-categories.
    pub fn build2(a: &Finite2Category, b: &Finite2Category, budget: &Budget) -> Result<Hom2> {
        Hom2::build(&embed(a), &embed(b), budget)
    }

    pub fn cat(&self) -> &Finite2Category {
        &self.h2.cat
    }

    /// The 2-cell corresponding to a hom-category square; fails when the
    /// square's frame has non-identity vertical pseudotransformations.
    pub fn two_of_sq(&self, s: SqId) -> Result<TwoId> {
        self.h2.require_two(s)
    }

    /// The modification behind a 2-cell.
    pub fn mod_of_two(&self, t: TwoId) -> &crate::hom::Modification {
        &self.inner.mods[self.h2.sq_of_two[t.0].0]
    }
}

/// The horizontal part of a double functor `f: D → E`, as a 2-functor
/// `H(D) → H(E)`. Well defined because double functors preserve identity
/// vertical 1-cells, hence identity-framed squares.
pub fn h_of_functor(f: &DoubleFunctor, dom: &Horizontal2, cod: &Horizontal2) -> Result<TwoFunctor> {
    let mut two = Vec::new();
    for &s in &dom.sq_of_two {
        two.push(cod.require_two(f.sq(s))?);
    }
    Ok(TwoFunctor {
        obj: f.obj.clone(),
        one: f.h.iter().map(|h| OneId(h.0)).collect(),
        two,
    })
}

/// The hom action `[p, q]: H⟦A, B⟧ → H⟦A', B'⟧` for double functors
/// `p: A' → A` (contravariant) and `q: B → B'`: the horizontal part of the
/// double-level hom map.
pub fn two_hom_map(
    p: &DoubleFunctor,
    q: &DoubleFunctor,
    hom_ab: &Hom2,
    hom_a2b2: &Hom2,
) -> Result<TwoFunctor> {
    let f = hom_map(p, q, &hom_a2b2.dom, &hom_ab.inner, &hom_a2b2.inner)?;
    h_of_functor(&f, &hom_ab.h2, &hom_a2b2.h2)
}

/// The canonical 2-functor `H(A) → H⟦𝟙, A⟧` picking constant-shaped cells.
pub fn unit_intro2(a: &FiniteDoubleCategory, hom_unit_a: &Hom2) -> Result<TwoFunctor> {
    let f = unit_intro(a, &hom_unit_a.inner)?;
    h_of_functor(&f, &horizontal_two_category(a), &hom_unit_a.h2)
}

/// The canonical 2-functor `H⟦𝟙, A⟧ → H(A)`, inverse to [`unit_intro2`]:
/// evaluation at the unique object of the unit.
pub fn unit_elim2(a: &FiniteDoubleCategory, hom_unit_a: &Hom2) -> Result<TwoFunctor> {
    let h_a = horizontal_two_category(a);
    let mut two = Vec::new();
    for t in hom_unit_a.cat().two_ids() {
        two.push(h_a.require_two(hom_unit_a.mod_of_two(t).comp[0])?);
    }
    Ok(TwoFunctor {
        obj: hom_unit_a.inner.functors.iter().map(|f| f.obj[0]).collect(),
        one: hom_unit_a
            .inner
            .hpseudos
            .iter()
            .map(|x| OneId(x.comp_obj[0].0))
            .collect(),
        two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;
    use crate::two::{arrow2, is_isomorphic2, terminal2, walking_twocell};

    fn budget() -> Budget {
        Budget::new(200_000_000)
    }

    #[test]
    fn hom_of_unit_and_b_is_b() {
        for b in [terminal2(), arrow2(), walking_twocell()] {
            let hom = Hom2::build2(&terminal2(), &b, &budget()).unwrap();
            hom.cat().validate().unwrap();
            assert!(is_isomorphic2(hom.cat(), &b));
        }
    }

    #[test]
    fn hom_of_a_and_unit_is_unit() {
        for a in [terminal2(), arrow2(), walking_twocell()] {
            let hom = Hom2::build2(&a, &terminal2(), &budget()).unwrap();
            assert!(is_isomorphic2(hom.cat(), &terminal2()));
        }
    }

    #[test]
    fn hom_of_two_arrows_has_the_expected_cells() {
        // 2-functors arrow → arrow: three object assignments; pseudonatural
        // transformations reduce to strict natural ones because the only
        // invertible 2-cells are identities; modifications need identity
        // component 2-cells, so they exist only for equal parallel pairs.
        let hom = Hom2::build2(&arrow2(), &arrow2(), &budget()).unwrap();
        hom.cat().validate().unwrap();
        assert_eq!(hom.cat().objects.len(), 3);
        assert_eq!(hom.cat().onecells.len(), 6);
        assert_eq!(hom.cat().twocells.len(), 6);
    }

    #[test]
    fn two_hom_map_is_functorial_on_identities() {
        let a = arrow2();
        let hom = Hom2::build2(&a, &a, &budget()).unwrap();
        let id = DoubleFunctor::identity(&embed(&a));
        let f = two_hom_map(&id, &id, &hom, &hom).unwrap();
        assert_eq!(f, TwoFunctor::identity(hom.cat()));
    }

    #[test]
    fn unit_intro_and_elim_are_mutually_inverse() {
        for a in [zoo::terminal(), zoo::free_arrow_h(), zoo::generator()] {
            let hom = Hom2::build(&zoo::terminal(), &a, &budget()).unwrap();
            let intro = unit_intro2(&a, &hom).unwrap();
            let elim = unit_elim2(&a, &hom).unwrap();
            let h_a = horizontal_two_category(&a);
            assert_eq!(elim.after(&intro), TwoFunctor::identity(&h_a.cat));
            assert_eq!(intro.after(&elim), TwoFunctor::identity(hom.cat()));
            intro.validate(&h_a.cat, hom.cat()).unwrap();
            elim.validate(hom.cat(), &h_a.cat).unwrap();
        }
    }
}

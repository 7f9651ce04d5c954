//!  Double functors between table-presented double categories.
//!
//! A double functor is four total cell maps preserving boundaries, all
//! identity assignments and all four compositions. Functors are stored as
//! index vectors over the domain's cells; validation is exhaustive.
//! [`enumerate_functors`] lists every double functor between two finite
//! double categories by backtracking with constraint propagation, in a
//! deterministic lexicographic order.

use crate::budget::Budget;
use crate::dbl::category::*;
use crate::error::{AxiomFailure, Error, Result};

/// A double functor `dom → cod`, stored as its four cell maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct DoubleFunctor {
    pub obj: Vec<ObjId>,
    pub h: Vec<HId>,
    pub v: Vec<VId>,
    pub sq: Vec<SqId>,
}

impl DoubleFunctor {
    pub fn identity(dom: &FiniteDoubleCategory) -> Self {
        DoubleFunctor {
            obj: dom.obj_ids().collect(),
            h: dom.h_ids().collect(),
            v: dom.v_ids().collect(),
            sq: dom.sq_ids().collect(),
        }
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.obj[a.0]
    }
    pub fn h(&self, f: HId) -> HId {
        self.h[f.0]
    }
    pub fn v(&self, f: VId) -> VId {
        self.v[f.0]
    }
    pub fn sq(&self, s: SqId) -> SqId {
        self.sq[s.0]
    }

    /// `self` after `first`: the composite functor `x ↦ self(first(x))`.
    pub fn after(&self, first: &DoubleFunctor) -> DoubleFunctor {
        DoubleFunctor {
            obj: first.obj.iter().map(|&a| self.obj[a.0]).collect(),
            h: first.h.iter().map(|&f| self.h[f.0]).collect(),
            v: first.v.iter().map(|&f| self.v[f.0]).collect(),
            sq: first.sq.iter().map(|&s| self.sq[s.0]).collect(),
        }
    }

    /// Check all double functor laws for `self : dom → cod`.
    pub fn validate(
        &self,
        dom: &FiniteDoubleCategory,
        cod: &FiniteDoubleCategory,
    ) -> std::result::Result<(), Vec<AxiomFailure>> {
        let mut errs = Vec::new();
        let mut bad = |law: &str, details: String| {
            errs.push(AxiomFailure { law: law.to_string(), details })
        };
        if self.obj.len() != dom.objects.len()
            || self.h.len() != dom.hcells.len()
            || self.v.len() != dom.vcells.len()
            || self.sq.len() != dom.squares.len()
        {
            bad("structure", "cell map lengths do not match the domain".into());
            return Err(errs);
        }
        if self.obj.iter().any(|a| a.0 >= cod.objects.len())
            || self.h.iter().any(|f| f.0 >= cod.hcells.len())
            || self.v.iter().any(|f| f.0 >= cod.vcells.len())
            || self.sq.iter().any(|s| s.0 >= cod.squares.len())
        {
            bad("structure", "cell map image out of range in the codomain".into());
            return Err(errs);
        }
        for f in dom.h_ids() {
            let (src, tgt) = (dom.hcell(f).src, dom.hcell(f).tgt);
            let img = cod.hcell(self.h(f));
            if img.src != self.obj(src) || img.tgt != self.obj(tgt) {
                bad("boundary", format!("hcell {} maps with wrong endpoints", dom.hcell(f).name));
            }
        }
        for f in dom.v_ids() {
            let (src, tgt) = (dom.vcell(f).src, dom.vcell(f).tgt);
            let img = cod.vcell(self.v(f));
            if img.src != self.obj(src) || img.tgt != self.obj(tgt) {
                bad("boundary", format!("vcell {} maps with wrong endpoints", dom.vcell(f).name));
            }
        }
        for s in dom.sq_ids() {
            let sq = dom.square(s);
            let img = cod.square(self.sq(s));
            if img.top != self.h(sq.top)
                || img.left != self.v(sq.left)
                || img.bottom != self.h(sq.bottom)
                || img.right != self.v(sq.right)
            {
                bad("boundary", format!("square {} maps with wrong frame", sq.name));
            }
        }
        for a in dom.obj_ids() {
            if self.h(dom.h_id(a)) != cod.h_id(self.obj(a)) {
                bad("identity", format!("identity hcell of {} not preserved", dom.objects[a.0]));
            }
            if self.v(dom.v_id(a)) != cod.v_id(self.obj(a)) {
                bad("identity", format!("identity vcell of {} not preserved", dom.objects[a.0]));
            }
        }
        for f in dom.h_ids() {
            if self.sq(dom.sq_v_id(f)) != cod.sq_v_id(self.h(f)) {
                bad("identity", format!("vertical identity square of {} not preserved", dom.hcell(f).name));
            }
        }
        for f in dom.v_ids() {
            if self.sq(dom.sq_h_id(f)) != cod.sq_h_id(self.v(f)) {
                bad("identity", format!("horizontal identity square of {} not preserved", dom.vcell(f).name));
            }
        }
        for (&(f, g), &c) in &dom.h_comp {
            if cod.try_h(self.h(f), self.h(g)) != Some(self.h(c)) {
                bad("composition-h", format!("{};{}", dom.hcell(f).name, dom.hcell(g).name));
            }
        }
        for (&(f, g), &c) in &dom.v_comp {
            if cod.try_v(self.v(f), self.v(g)) != Some(self.v(c)) {
                bad("composition-v", format!("{};{}", dom.vcell(f).name, dom.vcell(g).name));
            }
        }
        for (&(s, t), &c) in &dom.sq_h_comp {
            if cod.try_sq_h(self.sq(s), self.sq(t)) != Some(self.sq(c)) {
                bad("composition-sq-h", format!("{};{}", dom.square(s).name, dom.square(t).name));
            }
        }
        for (&(s, t), &c) in &dom.sq_v_comp {
            if cod.try_sq_v(self.sq(s), self.sq(t)) != Some(self.sq(c)) {
                bad("composition-sq-v", format!("{};{}", dom.square(s).name, dom.square(t).name));
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(errs)
        }
    }

    pub fn validated(self, dom: &FiniteDoubleCategory, cod: &FiniteDoubleCategory) -> Result<Self> {
        match self.validate(dom, cod) {
            Ok(()) => Ok(self),
            Err(errs) => Err(Error::Axioms(errs)),
        }
    }
}

struct Search<'a> {
    dom: &'a FiniteDoubleCategory,
    cod: &'a FiniteDoubleCategory,
    budget: &'a Budget,
    out: Vec<DoubleFunctor>,
}

/// Enumerate all double functors `dom → cod` in lexicographic order of their
/// (objects, hcells, vcells, squares) image vectors.
///
/// The search assigns objects first, then horizontal and vertical 1-cells
/// constrained by endpoints, then squares constrained by frames. Identity
/// cells are forced as soon as their object (or 1-cell) is placed, and every
/// fully-instantiated composition table entry is checked before descending.
pub fn enumerate_functors(
    dom: &FiniteDoubleCategory,
    cod: &FiniteDoubleCategory,
    budget: &Budget,
) -> Result<Vec<DoubleFunctor>> {
    let mut search = Search { dom, cod, budget, out: Vec::new() };
    let mut obj = vec![usize::MAX; dom.objects.len()];
    search.objects(0, &mut obj)?;
    Ok(search.out)
}

impl<'a> Search<'a> {
    fn objects(&mut self, i: usize, obj: &mut Vec<usize>) -> Result<()> {
        if i == self.dom.objects.len() {
            let obj_v: Vec<ObjId> = obj.iter().map(|&o| ObjId(o)).collect();
            let mut h = vec![usize::MAX; self.dom.hcells.len()];
            for a in self.dom.obj_ids() {
                h[self.dom.h_id(a).0] = self.cod.h_id(obj_v[a.0]).0;
            }
            return self.hcells(0, &obj_v, &mut h);
        }
        for cand in 0..self.cod.objects.len() {
            self.budget.charge(1, "functor enumeration")?;
            obj[i] = cand;
            // Feasibility: every 1-cell between already-assigned objects must
            // have at least one candidate image.
            let ok = self.dom.h_ids().all(|f| {
                let hc = self.dom.hcell(f);
                if hc.src.0 > i || hc.tgt.0 > i {
                    return true;
                }
                self.cod.h_ids().any(|g| {
                    self.cod.hcell(g).src.0 == obj[hc.src.0]
                        && self.cod.hcell(g).tgt.0 == obj[hc.tgt.0]
                })
            }) && self.dom.v_ids().all(|f| {
                let vc = self.dom.vcell(f);
                if vc.src.0 > i || vc.tgt.0 > i {
                    return true;
                }
                self.cod.v_ids().any(|g| {
                    self.cod.vcell(g).src.0 == obj[vc.src.0]
                        && self.cod.vcell(g).tgt.0 == obj[vc.tgt.0]
                })
            });
            if ok {
                self.objects(i + 1, obj)?;
            }
        }
        obj[i] = usize::MAX;
        Ok(())
    }

    fn hcells(&mut self, i: usize, obj: &[ObjId], h: &mut Vec<usize>) -> Result<()> {
        let mut i = i;
        while i < h.len() && h[i] != usize::MAX {
            i += 1;
        }
        if i == h.len() {
            if !self.h_comp_ok(h) {
                return Ok(());
            }
            let h_v: Vec<HId> = h.iter().map(|&x| HId(x)).collect();
            let mut v = vec![usize::MAX; self.dom.vcells.len()];
            for a in self.dom.obj_ids() {
                v[self.dom.v_id(a).0] = self.cod.v_id(obj[a.0]).0;
            }
            return self.vcells(0, obj, &h_v, &mut v);
        }
        let (src, tgt) = (self.dom.hcell(HId(i)).src, self.dom.hcell(HId(i)).tgt);
        for cand in self.cod.h_ids() {
            self.budget.charge(1, "functor enumeration")?;
            if self.cod.hcell(cand).src != obj[src.0] || self.cod.hcell(cand).tgt != obj[tgt.0] {
                continue;
            }
            h[i] = cand.0;
            if self.h_comp_partial_ok(h) {
                self.hcells(i + 1, obj, h)?;
            }
            h[i] = usize::MAX;
        }
        Ok(())
    }

    fn h_comp_partial_ok(&self, h: &[usize]) -> bool {
        self.dom.h_comp.iter().all(|(&(f, g), &c)| {
            if h[f.0] == usize::MAX || h[g.0] == usize::MAX || h[c.0] == usize::MAX {
                return true;
            }
            self.cod.try_h(HId(h[f.0]), HId(h[g.0])) == Some(HId(h[c.0]))
        })
    }

    fn h_comp_ok(&self, h: &[usize]) -> bool {
        self.h_comp_partial_ok(h)
    }

    fn vcells(&mut self, i: usize, obj: &[ObjId], h: &[HId], v: &mut Vec<usize>) -> Result<()> {
        let mut i = i;
        while i < v.len() && v[i] != usize::MAX {
            i += 1;
        }
        if i == v.len() {
            let all_ok = self.dom.v_comp.iter().all(|(&(f, g), &c)| {
                self.cod.try_v(VId(v[f.0]), VId(v[g.0])) == Some(VId(v[c.0]))
            });
            if !all_ok {
                return Ok(());
            }
            let v_v: Vec<VId> = v.iter().map(|&x| VId(x)).collect();
            let mut sq = vec![usize::MAX; self.dom.squares.len()];
            for f in self.dom.h_ids() {
                let forced = self.cod.sq_v_id(h[f.0]).0;
                let slot = self.dom.sq_v_id(f).0;
                if sq[slot] != usize::MAX && sq[slot] != forced {
                    return Ok(());
                }
                sq[slot] = forced;
            }
            for f in self.dom.v_ids() {
                let forced = self.cod.sq_h_id(v_v[f.0]).0;
                let slot = self.dom.sq_h_id(f).0;
                if sq[slot] != usize::MAX && sq[slot] != forced {
                    return Ok(());
                }
                sq[slot] = forced;
            }
            return self.squares(0, obj, h, &v_v, &mut sq);
        }
        let (src, tgt) = (self.dom.vcell(VId(i)).src, self.dom.vcell(VId(i)).tgt);
        for cand in self.cod.v_ids() {
            self.budget.charge(1, "functor enumeration")?;
            if self.cod.vcell(cand).src != obj[src.0] || self.cod.vcell(cand).tgt != obj[tgt.0] {
                continue;
            }
            v[i] = cand.0;
            let partial_ok = self.dom.v_comp.iter().all(|(&(f, g), &c)| {
                if v[f.0] == usize::MAX || v[g.0] == usize::MAX || v[c.0] == usize::MAX {
                    return true;
                }
                self.cod.try_v(VId(v[f.0]), VId(v[g.0])) == Some(VId(v[c.0]))
            });
            if partial_ok {
                self.vcells(i + 1, obj, h, v)?;
            }
            v[i] = usize::MAX;
        }
        Ok(())
    }

    fn squares(&mut self, i: usize, obj: &[ObjId], h: &[HId], v: &[VId], sq: &mut Vec<usize>) -> Result<()> {
        let mut i = i;
        while i < sq.len() && sq[i] != usize::MAX {
            i += 1;
        }
        if i == sq.len() {
            let frames_ok = self.dom.sq_ids().all(|s| {
                let d = self.dom.square(s);
                let c = self.cod.square(SqId(sq[s.0]));
                c.top == h[d.top.0]
                    && c.left == v[d.left.0]
                    && c.bottom == h[d.bottom.0]
                    && c.right == v[d.right.0]
            });
            let comp_ok = frames_ok
                && self.dom.sq_h_comp.iter().all(|(&(s, t), &c)| {
                    self.cod.try_sq_h(SqId(sq[s.0]), SqId(sq[t.0])) == Some(SqId(sq[c.0]))
                })
                && self.dom.sq_v_comp.iter().all(|(&(s, t), &c)| {
                    self.cod.try_sq_v(SqId(sq[s.0]), SqId(sq[t.0])) == Some(SqId(sq[c.0]))
                });
            if comp_ok {
                self.out.push(DoubleFunctor {
                    obj: obj.to_vec(),
                    h: h.to_vec(),
                    v: v.to_vec(),
                    sq: sq.iter().map(|&x| SqId(x)).collect(),
                });
            }
            return Ok(());
        }
        let d = self.dom.square(SqId(i));
        let frame = (h[d.top.0], v[d.left.0], h[d.bottom.0], v[d.right.0]);
        for cand in self.cod.sq_ids() {
            self.budget.charge(1, "functor enumeration")?;
            let c = self.cod.square(cand);
            if c.top != frame.0 || c.left != frame.1 || c.bottom != frame.2 || c.right != frame.3 {
                continue;
            }
            sq[i] = cand.0;
            let partial_ok = self
                .dom
                .sq_h_comp
                .iter()
                .all(|(&(s, t), &c)| {
                    if sq[s.0] == usize::MAX || sq[t.0] == usize::MAX || sq[c.0] == usize::MAX {
                        return true;
                    }
                    self.cod.try_sq_h(SqId(sq[s.0]), SqId(sq[t.0])) == Some(SqId(sq[c.0]))
                })
                && self.dom.sq_v_comp.iter().all(|(&(s, t), &c)| {
                    if sq[s.0] == usize::MAX || sq[t.0] == usize::MAX || sq[c.0] == usize::MAX {
                        return true;
                    }
                    self.cod.try_sq_v(SqId(sq[s.0]), SqId(sq[t.0])) == Some(SqId(sq[c.0]))
                });
            if partial_ok {
                self.squares(i + 1, obj, h, v, sq)?;
            }
            sq[i] = usize::MAX;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;

    fn count(dom: &FiniteDoubleCategory, cod: &FiniteDoubleCategory) -> usize {
        enumerate_functors(dom, cod, &Budget::default()).unwrap().len()
    }

    /// Maps out of the free-standing square classify squares: the number of
    /// functors equals the number of squares of the codomain.
    #[test]
    fn generator_represents_squares() {
        let g = zoo::generator();
        for cod in [
            zoo::terminal(),
            zoo::generator(),
            zoo::free_arrow_h(),
            zoo::free_arrow_v(),
            zoo::product(&zoo::free_arrow_h(), &zoo::free_arrow_v()),
        ] {
            assert_eq!(count(&g, &cod), cod.squares.len());
        }
    }

    #[test]
    fn functors_validate_and_include_identity() {
        let g = zoo::generator();
        let fs = enumerate_functors(&g, &g, &Budget::default()).unwrap();
        for f in &fs {
            f.validate(&g, &g).unwrap();
        }
        assert!(fs.contains(&DoubleFunctor::identity(&g)));
    }

    #[test]
    fn terminal_is_terminal() {
        let t = zoo::terminal();
        for dom in [zoo::terminal(), zoo::generator(), zoo::free_arrow_h()] {
            assert_eq!(count(&dom, &t), 1);
        }
        // ... and nothing maps out of a nonempty category into the empty one.
        assert_eq!(count(&zoo::terminal(), &FiniteDoubleCategory::empty()), 0);
        assert_eq!(count(&FiniteDoubleCategory::empty(), &zoo::terminal()), 1);
    }

    #[test]
    fn enumeration_is_deterministic_and_sorted() {
        let a = zoo::free_arrow_h();
        let fs = enumerate_functors(&a, &zoo::generator(), &Budget::default()).unwrap();
        let mut sorted = fs.clone();
        sorted.sort();
        assert_eq!(fs, sorted);
        let again = enumerate_functors(&a, &zoo::generator(), &Budget::default()).unwrap();
        assert_eq!(fs, again);
    }

    #[test]
    fn budget_failure_is_reported() {
        let g = zoo::generator();
        let tiny = Budget::new(3);
        assert!(matches!(
            enumerate_functors(&g, &g, &tiny),
            Err(crate::error::Error::Budget(_))
        ));
    }
}

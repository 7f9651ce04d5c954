//! Isomorphism testing for finite double categories.
//!
//! Two table-presented double categories are isomorphic when there are
//! bijections on all four kinds of cells commuting with boundaries,
//! identities and all four compositions. The search below is plain
//! backtracking, adequate for the sizes this crate works with; identity cells
//! are forced by the object bijection, which prunes most of the space.

use super::category::*;

/// Decide whether `a` and `b` are isomorphic as double categories.
pub fn is_isomorphic(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> bool {
    if a.objects.len() != b.objects.len()
        || a.hcells.len() != b.hcells.len()
        || a.vcells.len() != b.vcells.len()
        || a.squares.len() != b.squares.len()
    {
        return false;
    }
    let mut obj_map: Vec<Option<ObjId>> = vec![None; a.objects.len()];
    let mut used = vec![false; b.objects.len()];
    assign_objects(a, b, 0, &mut obj_map, &mut used)
}

fn assign_objects(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    next: usize,
    obj_map: &mut Vec<Option<ObjId>>,
    used: &mut Vec<bool>,
) -> bool {
    if next == a.objects.len() {
        let obj_map: Vec<ObjId> = obj_map.iter().map(|o| o.unwrap()).collect();
        let mut h_map: Vec<Option<HId>> = vec![None; a.hcells.len()];
        let mut h_used = vec![false; b.hcells.len()];
        // Identities are forced.
        for o in a.obj_ids() {
            let img = b.h_id(obj_map[o.0]);
            h_map[a.h_id(o).0] = Some(img);
            h_used[img.0] = true;
        }
        return assign_ones(
            a,
            b,
            &obj_map,
            0,
            &mut h_map,
            &mut h_used,
            &|d: &FiniteDoubleCategory, f: HId| (d.hcell(f).src, d.hcell(f).tgt),
            &|d: &FiniteDoubleCategory| d.hcells.len(),
            &|d: &FiniteDoubleCategory, f, g| d.try_h(f, g),
            &mut |h_map| {
                let h_map: Vec<HId> = h_map.iter().map(|x| x.unwrap()).collect();
                let mut v_map: Vec<Option<VId>> = vec![None; a.vcells.len()];
                let mut v_used = vec![false; b.vcells.len()];
                for o in a.obj_ids() {
                    let img = b.v_id(obj_map[o.0]);
                    v_map[a.v_id(o).0] = Some(img);
                    v_used[img.0] = true;
                }
                assign_vones(a, b, &obj_map, &h_map, 0, &mut v_map, &mut v_used)
            },
        );
    }
    for cand in b.obj_ids() {
        if used[cand.0] {
            continue;
        }
        obj_map[next] = Some(cand);
        used[cand.0] = true;
        if assign_objects(a, b, next + 1, obj_map, used) {
            return true;
        }
        obj_map[next] = None;
        used[cand.0] = false;
    }
    false
}

/// Backtracking assignment of horizontal 1-cells; `done` continues the search
/// once all are placed.
#[allow(clippy::too_many_arguments)]
fn assign_ones(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    obj_map: &[ObjId],
    next: usize,
    h_map: &mut Vec<Option<HId>>,
    h_used: &mut Vec<bool>,
    ends: &dyn Fn(&FiniteDoubleCategory, HId) -> (ObjId, ObjId),
    _count: &dyn Fn(&FiniteDoubleCategory) -> usize,
    comp: &dyn Fn(&FiniteDoubleCategory, HId, HId) -> Option<HId>,
    done: &mut dyn FnMut(&Vec<Option<HId>>) -> bool,
) -> bool {
    // Find the next unassigned hcell.
    let mut i = next;
    while i < a.hcells.len() && h_map[i].is_some() {
        i += 1;
    }
    if i == a.hcells.len() {
        // Check full multiplicativity before descending.
        for (&(f, g), &c) in &a.h_comp {
            let (bf, bg, bc) = (h_map[f.0].unwrap(), h_map[g.0].unwrap(), h_map[c.0].unwrap());
            if comp(b, bf, bg) != Some(bc) {
                return false;
            }
        }
        return done(h_map);
    }
    let (s, t) = ends(a, HId(i));
    for cand in b.h_ids() {
        if h_used[cand.0] {
            continue;
        }
        let (cs, ct) = ends(b, cand);
        if cs != obj_map[s.0] || ct != obj_map[t.0] {
            continue;
        }
        h_map[i] = Some(cand);
        h_used[cand.0] = true;
        if assign_ones(a, b, obj_map, i + 1, h_map, h_used, ends, _count, comp, done) {
            return true;
        }
        h_map[i] = None;
        h_used[cand.0] = false;
    }
    false
}

fn assign_vones(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    obj_map: &[ObjId],
    h_map: &[HId],
    next: usize,
    v_map: &mut Vec<Option<VId>>,
    v_used: &mut Vec<bool>,
) -> bool {
    let mut i = next;
    while i < a.vcells.len() && v_map[i].is_some() {
        i += 1;
    }
    if i == a.vcells.len() {
        for (&(f, g), &c) in &a.v_comp {
            let (bf, bg, bc) = (v_map[f.0].unwrap(), v_map[g.0].unwrap(), v_map[c.0].unwrap());
            if b.try_v(bf, bg) != Some(bc) {
                return false;
            }
        }
        let v_map: Vec<VId> = v_map.iter().map(|x| x.unwrap()).collect();
        let mut s_map: Vec<Option<SqId>> = vec![None; a.squares.len()];
        let mut s_used = vec![false; b.squares.len()];
        for h in a.h_ids() {
            let img = b.sq_v_id(h_map[h.0]);
            if let Some(prev) = s_map[a.sq_v_id(h).0] {
                if prev != img {
                    return false;
                }
            }
            if s_map[a.sq_v_id(h).0].is_none() {
                if s_used[img.0] {
                    return false;
                }
                s_map[a.sq_v_id(h).0] = Some(img);
                s_used[img.0] = true;
            }
        }
        for v in a.v_ids() {
            let img = b.sq_h_id(v_map[v.0]);
            match s_map[a.sq_h_id(v).0] {
                Some(prev) if prev != img => return false,
                Some(_) => {}
                None => {
                    if s_used[img.0] {
                        return false;
                    }
                    s_map[a.sq_h_id(v).0] = Some(img);
                    s_used[img.0] = true;
                }
            }
        }
        return assign_squares(a, b, h_map, &v_map, 0, &mut s_map, &mut s_used);
    }
    let (s, t) = (a.vcell(VId(i)).src, a.vcell(VId(i)).tgt);
    for cand in b.v_ids() {
        if v_used[cand.0] {
            continue;
        }
        if b.vcell(cand).src != obj_map[s.0] || b.vcell(cand).tgt != obj_map[t.0] {
            continue;
        }
        v_map[i] = Some(cand);
        v_used[cand.0] = true;
        if assign_vones(a, b, obj_map, h_map, i + 1, v_map, v_used) {
            return true;
        }
        v_map[i] = None;
        v_used[cand.0] = false;
    }
    false
}

fn assign_squares(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    h_map: &[HId],
    v_map: &[VId],
    next: usize,
    s_map: &mut Vec<Option<SqId>>,
    s_used: &mut Vec<bool>,
) -> bool {
    let mut i = next;
    while i < a.squares.len() && s_map[i].is_some() {
        i += 1;
    }
    if i == a.squares.len() {
        for (&(s, t), &c) in &a.sq_h_comp {
            let (bs, bt, bc) = (s_map[s.0].unwrap(), s_map[t.0].unwrap(), s_map[c.0].unwrap());
            if b.try_sq_h(bs, bt) != Some(bc) {
                return false;
            }
        }
        for (&(s, t), &c) in &a.sq_v_comp {
            let (bs, bt, bc) = (s_map[s.0].unwrap(), s_map[t.0].unwrap(), s_map[c.0].unwrap());
            if b.try_sq_v(bs, bt) != Some(bc) {
                return false;
            }
        }
        return true;
    }
    let sq = a.square(SqId(i));
    let frame = (
        h_map[sq.top.0],
        v_map[sq.left.0],
        h_map[sq.bottom.0],
        v_map[sq.right.0],
    );
    for cand in b.squares_with_frame(frame.0, frame.1, frame.2, frame.3) {
        if s_used[cand.0] {
            continue;
        }
        s_map[i] = Some(cand);
        s_used[cand.0] = true;
        if assign_squares(a, b, h_map, v_map, i + 1, s_map, s_used) {
            return true;
        }
        s_map[i] = None;
        s_used[cand.0] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::zoo;

    #[test]
    fn iso_reflexive_and_distinguishing() {
        let g = zoo::generator();
        let t = zoo::terminal();
        let ah = zoo::free_arrow_h();
        let av = zoo::free_arrow_v();
        assert!(is_isomorphic(&g, &g));
        assert!(is_isomorphic(&t, &t));
        assert!(!is_isomorphic(&g, &t));
        assert!(!is_isomorphic(&ah, &av));
        assert!(is_isomorphic(&av, &zoo::transpose(&ah)));
        assert!(is_isomorphic(&ah, &zoo::transpose(&av)));
    }

    #[test]
    fn iso_invariant_under_relabeling() {
        let mut g2 = zoo::generator();
        g2.objects.reverse();
        // Reversing names alone does not change the structure.
        assert!(is_isomorphic(&zoo::generator(), &g2));
    }
}

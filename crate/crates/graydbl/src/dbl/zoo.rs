//! Stock double categories used as fixtures and unit objects.

use super::category::*;
use std::collections::BTreeMap;

/// Build the composition tables of a category in which every composable pair
/// of cells contains an identity, so every composite is forced. Panics if a
/// composable pair of non-identities exists: such a category needs handwritten
/// tables.
fn close_identity_only(mut d: FiniteDoubleCategory) -> FiniteDoubleCategory {
    let is_h_id = |d: &FiniteDoubleCategory, f: HId| d.h_id[d.hcell(f).src.0] == f;
    let is_v_id = |d: &FiniteDoubleCategory, f: VId| d.v_id[d.vcell(f).src.0] == f;
    let mut h_comp = BTreeMap::new();
    for f in d.h_ids() {
        for g in d.h_ids() {
            if d.hcell(f).tgt == d.hcell(g).src {
                let c = if is_h_id(&d, f) {
                    g
                } else if is_h_id(&d, g) {
                    f
                } else {
                    panic!("close_identity_only: non-identity hcells compose")
                };
                h_comp.insert((f, g), c);
            }
        }
    }
    let mut v_comp = BTreeMap::new();
    for f in d.v_ids() {
        for g in d.v_ids() {
            if d.vcell(f).tgt == d.vcell(g).src {
                let c = if is_v_id(&d, f) {
                    g
                } else if is_v_id(&d, g) {
                    f
                } else {
                    panic!("close_identity_only: non-identity vcells compose")
                };
                v_comp.insert((f, g), c);
            }
        }
    }
    let mut sq_h = BTreeMap::new();
    let mut sq_v = BTreeMap::new();
    for s in d.sq_ids() {
        for t in d.sq_ids() {
            if d.square(s).right == d.square(t).left {
                let c = if d.sq_h_id[d.square(t).left.0] == s {
                    t
                } else if d.sq_h_id[d.square(s).right.0] == t {
                    s
                } else {
                    panic!("close_identity_only: non-identity squares compose horizontally")
                };
                sq_h.insert((s, t), c);
            }
            if d.square(s).bottom == d.square(t).top {
                let c = if d.sq_v_id[d.square(t).top.0] == s {
                    t
                } else if d.sq_v_id[d.square(s).bottom.0] == t {
                    s
                } else {
                    panic!("close_identity_only: non-identity squares compose vertically")
                };
                sq_v.insert((s, t), c);
            }
        }
    }
    d.h_comp = h_comp;
    d.v_comp = v_comp;
    d.sq_h_comp = sq_h;
    d.sq_v_comp = sq_v;
    d
}

/// The one-cell double category: one object and only identity cells.
pub fn terminal() -> FiniteDoubleCategory {
    let d = FiniteDoubleCategory {
        objects: vec!["*".into()],
        hcells: vec![HCell { name: "id*".into(), src: ObjId(0), tgt: ObjId(0) }],
        vcells: vec![VCell { name: "id*".into(), src: ObjId(0), tgt: ObjId(0) }],
        squares: vec![Square {
            name: "id*".into(),
            top: HId(0),
            left: VId(0),
            bottom: HId(0),
            right: VId(0),
        }],
        h_id: vec![HId(0)],
        v_id: vec![VId(0)],
        sq_v_id: vec![SqId(0)],
        sq_h_id: vec![SqId(0)],
        h_comp: BTreeMap::new(),
        v_comp: BTreeMap::new(),
        sq_h_comp: BTreeMap::new(),
        sq_v_comp: BTreeMap::new(),
    };
    close_identity_only(d)
}

/// The free-standing square: four objects, one non-identity square `tau`
/// framed by non-identity 1-cells `t`, `l`, `b`, `r`, plus the forced
/// identity cells. Maps out of this category classify squares.
pub fn generator() -> FiniteDoubleCategory {
    let (x, y, v, z) = (ObjId(0), ObjId(1), ObjId(2), ObjId(3));
    let hcells = vec![
        HCell { name: "idX".into(), src: x, tgt: x },
        HCell { name: "idY".into(), src: y, tgt: y },
        HCell { name: "idV".into(), src: v, tgt: v },
        HCell { name: "idZ".into(), src: z, tgt: z },
        HCell { name: "t".into(), src: x, tgt: y },
        HCell { name: "b".into(), src: v, tgt: z },
    ];
    let vcells = vec![
        VCell { name: "idX".into(), src: x, tgt: x },
        VCell { name: "idY".into(), src: y, tgt: y },
        VCell { name: "idV".into(), src: v, tgt: v },
        VCell { name: "idZ".into(), src: z, tgt: z },
        VCell { name: "l".into(), src: x, tgt: v },
        VCell { name: "r".into(), src: y, tgt: z },
    ];
    let (t, b) = (HId(4), HId(5));
    let (l, r) = (VId(4), VId(5));
    let squares = vec![
        Square { name: "idX".into(), top: HId(0), left: VId(0), bottom: HId(0), right: VId(0) },
        Square { name: "idY".into(), top: HId(1), left: VId(1), bottom: HId(1), right: VId(1) },
        Square { name: "idV".into(), top: HId(2), left: VId(2), bottom: HId(2), right: VId(2) },
        Square { name: "idZ".into(), top: HId(3), left: VId(3), bottom: HId(3), right: VId(3) },
        Square { name: "1t".into(), top: t, left: VId(0), bottom: t, right: VId(1) },
        Square { name: "1b".into(), top: b, left: VId(2), bottom: b, right: VId(3) },
        Square { name: "1l".into(), top: HId(0), left: l, bottom: HId(2), right: l },
        Square { name: "1r".into(), top: HId(1), left: r, bottom: HId(3), right: r },
        Square { name: "tau".into(), top: t, left: l, bottom: b, right: r },
    ];
    let d = FiniteDoubleCategory {
        objects: vec!["X".into(), "Y".into(), "V".into(), "Z".into()],
        hcells,
        vcells,
        squares,
        h_id: vec![HId(0), HId(1), HId(2), HId(3)],
        v_id: vec![VId(0), VId(1), VId(2), VId(3)],
        sq_v_id: vec![SqId(0), SqId(1), SqId(2), SqId(3), SqId(4), SqId(5)],
        sq_h_id: vec![SqId(0), SqId(1), SqId(2), SqId(3), SqId(6), SqId(7)],
        h_comp: BTreeMap::new(),
        v_comp: BTreeMap::new(),
        sq_h_comp: BTreeMap::new(),
        sq_v_comp: BTreeMap::new(),
    };
    close_identity_only(d)
}

/// The free horizontal arrow: two objects joined by one non-identity
/// horizontal 1-cell `a`, with only the forced identity cells elsewhere.
pub fn free_arrow_h() -> FiniteDoubleCategory {
    let (o0, o1) = (ObjId(0), ObjId(1));
    let d = FiniteDoubleCategory {
        objects: vec!["0".into(), "1".into()],
        hcells: vec![
            HCell { name: "id0".into(), src: o0, tgt: o0 },
            HCell { name: "id1".into(), src: o1, tgt: o1 },
            HCell { name: "a".into(), src: o0, tgt: o1 },
        ],
        vcells: vec![
            VCell { name: "id0".into(), src: o0, tgt: o0 },
            VCell { name: "id1".into(), src: o1, tgt: o1 },
        ],
        squares: vec![
            Square { name: "id0".into(), top: HId(0), left: VId(0), bottom: HId(0), right: VId(0) },
            Square { name: "id1".into(), top: HId(1), left: VId(1), bottom: HId(1), right: VId(1) },
            Square { name: "1a".into(), top: HId(2), left: VId(0), bottom: HId(2), right: VId(1) },
        ],
        h_id: vec![HId(0), HId(1)],
        v_id: vec![VId(0), VId(1)],
        sq_v_id: vec![SqId(0), SqId(1), SqId(2)],
        sq_h_id: vec![SqId(0), SqId(1)],
        h_comp: BTreeMap::new(),
        v_comp: BTreeMap::new(),
        sq_h_comp: BTreeMap::new(),
        sq_v_comp: BTreeMap::new(),
    };
    close_identity_only(d)
}

/// The free vertical arrow: the transpose of [`free_arrow_h`].
pub fn free_arrow_v() -> FiniteDoubleCategory {
    transpose(&free_arrow_h())
}

/// Swap the horizontal and vertical directions of a double category.
pub fn transpose(d: &FiniteDoubleCategory) -> FiniteDoubleCategory {
    FiniteDoubleCategory {
        objects: d.objects.clone(),
        hcells: d
            .vcells
            .iter()
            .map(|v| HCell { name: v.name.clone(), src: v.src, tgt: v.tgt })
            .collect(),
        vcells: d
            .hcells
            .iter()
            .map(|h| VCell { name: h.name.clone(), src: h.src, tgt: h.tgt })
            .collect(),
        squares: d
            .squares
            .iter()
            .map(|s| Square {
                name: s.name.clone(),
                top: HId(s.left.0),
                left: VId(s.top.0),
                bottom: HId(s.right.0),
                right: VId(s.bottom.0),
            })
            .collect(),
        h_id: d.v_id.iter().map(|v| HId(v.0)).collect(),
        v_id: d.h_id.iter().map(|h| VId(h.0)).collect(),
        sq_v_id: d.sq_h_id.clone(),
        sq_h_id: d.sq_v_id.clone(),
        h_comp: d
            .v_comp
            .iter()
            .map(|(&(f, g), &c)| ((HId(f.0), HId(g.0)), HId(c.0)))
            .collect(),
        v_comp: d
            .h_comp
            .iter()
            .map(|(&(f, g), &c)| ((VId(f.0), VId(g.0)), VId(c.0)))
            .collect(),
        sq_h_comp: d.sq_v_comp.clone(),
        sq_v_comp: d.sq_h_comp.clone(),
    }
}

/// The discrete double category on `n` objects: only identity cells.
pub fn discrete(n: usize) -> FiniteDoubleCategory {
    let d = FiniteDoubleCategory {
        objects: (0..n).map(|i| i.to_string()).collect(),
        hcells: (0..n)
            .map(|i| HCell { name: format!("id{i}"), src: ObjId(i), tgt: ObjId(i) })
            .collect(),
        vcells: (0..n)
            .map(|i| VCell { name: format!("id{i}"), src: ObjId(i), tgt: ObjId(i) })
            .collect(),
        squares: (0..n)
            .map(|i| Square {
                name: format!("id{i}"),
                top: HId(i),
                left: VId(i),
                bottom: HId(i),
                right: VId(i),
            })
            .collect(),
        h_id: (0..n).map(HId).collect(),
        v_id: (0..n).map(VId).collect(),
        sq_v_id: (0..n).map(SqId).collect(),
        sq_h_id: (0..n).map(SqId).collect(),
        h_comp: BTreeMap::new(),
        v_comp: BTreeMap::new(),
        sq_h_comp: BTreeMap::new(),
        sq_v_comp: BTreeMap::new(),
    };
    close_identity_only(d)
}

/// The multiplication table of the cyclic monoid `ℤ/n` (identity at index 0).
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// The multiplication table of the left-zero monoid on `n` elements: the unit
/// is index 0 and every other element absorbs from the left (`x·y = x` for
/// `x ≠ 0`). Noncommutative for `n ≥ 3`.
pub fn left_zero_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == 0 { j } else { i }).collect())
        .collect()
}

/// A one-object double category whose horizontal 1-cells form the monoid
/// presented by `h_table`, vertical 1-cells the monoid of `v_table` (both in
/// diagram order, `table[x][y] = x then y`, identity at index 0), and whose
/// squares over every frame `(t, l, b, r)` form a `ℤ/grades` torsor: square
/// index `(((t·nv + l)·nh + b)·nv + r)·grades + k`, all four compositions
/// composing frames by the tables and adding grades. With `grades = 1` this
/// is the thin double category of frames. Panics unless both tables are
/// associative monoid tables with identity at index 0 and `grades ≥ 1`.
pub fn monoid_shell(
    h_table: &[Vec<usize>],
    v_table: &[Vec<usize>],
    grades: usize,
) -> FiniteDoubleCategory {
    let (nh, nv) = (h_table.len(), v_table.len());
    assert!(grades >= 1, "monoid_shell: grades must be positive");
    for (name, t) in [("h_table", h_table), ("v_table", v_table)] {
        let n = t.len();
        assert!(n >= 1 && t.iter().all(|row| row.len() == n), "monoid_shell: ragged {name}");
        assert!((0..n).all(|j| t[0][j] == j && t[j][0] == j), "monoid_shell: {name} unit");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(t[t[x][y]][z], t[x][t[y][z]], "monoid_shell: {name} assoc");
                }
            }
        }
    }
    let sq = |t: usize, l: usize, b: usize, r: usize, k: usize| {
        SqId((((t * nv + l) * nh + b) * nv + r) * grades + k)
    };
    let mut squares = Vec::new();
    for t in 0..nh {
        for l in 0..nv {
            for b in 0..nh {
                for r in 0..nv {
                    for k in 0..grades {
                        debug_assert_eq!(squares.len(), sq(t, l, b, r, k).0);
                        squares.push(Square {
                            name: format!("s{t}.{l}.{b}.{r}g{k}"),
                            top: HId(t),
                            left: VId(l),
                            bottom: HId(b),
                            right: VId(r),
                        });
                    }
                }
            }
        }
    }
    let mut h_comp = BTreeMap::new();
    for i in 0..nh {
        for j in 0..nh {
            h_comp.insert((HId(i), HId(j)), HId(h_table[i][j]));
        }
    }
    let mut v_comp = BTreeMap::new();
    for i in 0..nv {
        for j in 0..nv {
            v_comp.insert((VId(i), VId(j)), VId(v_table[i][j]));
        }
    }
    let mut sq_h_comp = BTreeMap::new();
    let mut sq_v_comp = BTreeMap::new();
    for (i, s) in squares.iter().enumerate() {
        let k = i % grades;
        for b2 in 0..nh {
            for r2 in 0..nv {
                for k2 in 0..grades {
                    let kk = (k + k2) % grades;
                    for t2 in 0..nh {
                        sq_h_comp.insert(
                            (SqId(i), sq(t2, s.right.0, b2, r2, k2)),
                            sq(h_table[s.top.0][t2], s.left.0, h_table[s.bottom.0][b2], r2, kk),
                        );
                    }
                    for l2 in 0..nv {
                        sq_v_comp.insert(
                            (SqId(i), sq(s.bottom.0, l2, b2, r2, k2)),
                            sq(s.top.0, v_table[s.left.0][l2], b2, v_table[s.right.0][r2], kk),
                        );
                    }
                }
            }
        }
    }
    FiniteDoubleCategory {
        objects: vec!["*".into()],
        hcells: (0..nh)
            .map(|i| HCell { name: format!("h{i}"), src: ObjId(0), tgt: ObjId(0) })
            .collect(),
        vcells: (0..nv)
            .map(|i| VCell { name: format!("v{i}"), src: ObjId(0), tgt: ObjId(0) })
            .collect(),
        squares,
        h_id: vec![HId(0)],
        v_id: vec![VId(0)],
        sq_v_id: (0..nh).map(|t| sq(t, 0, t, 0, 0)).collect(),
        sq_h_id: (0..nv).map(|l| sq(0, l, 0, l, 0)).collect(),
        h_comp,
        v_comp,
        sq_h_comp,
        sq_v_comp,
    }
}

/// The cartesian product of two double categories: cells are pairs, all
/// structure componentwise.
pub fn product(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> FiniteDoubleCategory {
    let ob = |i: ObjId, j: ObjId| ObjId(i.0 * b.objects.len() + j.0);
    let hc = |i: HId, j: HId| HId(i.0 * b.hcells.len() + j.0);
    let vc = |i: VId, j: VId| VId(i.0 * b.vcells.len() + j.0);
    let sq = |i: SqId, j: SqId| SqId(i.0 * b.squares.len() + j.0);
    let pname = |x: &str, y: &str| format!("({x},{y})");

    let mut objects = Vec::new();
    for oa in &a.objects {
        for ob_ in &b.objects {
            objects.push(pname(oa, ob_));
        }
    }
    let mut hcells = Vec::new();
    for ha in &a.hcells {
        for hb in &b.hcells {
            hcells.push(HCell {
                name: pname(&ha.name, &hb.name),
                src: ob(ha.src, hb.src),
                tgt: ob(ha.tgt, hb.tgt),
            });
        }
    }
    let mut vcells = Vec::new();
    for va in &a.vcells {
        for vb in &b.vcells {
            vcells.push(VCell {
                name: pname(&va.name, &vb.name),
                src: ob(va.src, vb.src),
                tgt: ob(va.tgt, vb.tgt),
            });
        }
    }
    let mut squares = Vec::new();
    for sa in &a.squares {
        for sb in &b.squares {
            squares.push(Square {
                name: pname(&sa.name, &sb.name),
                top: hc(sa.top, sb.top),
                left: vc(sa.left, sb.left),
                bottom: hc(sa.bottom, sb.bottom),
                right: vc(sa.right, sb.right),
            });
        }
    }
    let mut h_id = Vec::new();
    let mut v_id = Vec::new();
    for i in a.obj_ids() {
        for j in b.obj_ids() {
            debug_assert_eq!(h_id.len(), ob(i, j).0);
            h_id.push(hc(a.h_id(i), b.h_id(j)));
            v_id.push(vc(a.v_id(i), b.v_id(j)));
        }
    }
    let mut sq_v_id = Vec::new();
    for i in a.h_ids() {
        for j in b.h_ids() {
            debug_assert_eq!(sq_v_id.len(), hc(i, j).0);
            sq_v_id.push(sq(a.sq_v_id(i), b.sq_v_id(j)));
        }
    }
    let mut sq_h_id = Vec::new();
    for i in a.v_ids() {
        for j in b.v_ids() {
            sq_h_id.push(sq(a.sq_h_id(i), b.sq_h_id(j)));
        }
    }
    let mut h_comp = BTreeMap::new();
    for (&(f1, g1), &c1) in &a.h_comp {
        for (&(f2, g2), &c2) in &b.h_comp {
            h_comp.insert((hc(f1, f2), hc(g1, g2)), hc(c1, c2));
        }
    }
    let mut v_comp = BTreeMap::new();
    for (&(f1, g1), &c1) in &a.v_comp {
        for (&(f2, g2), &c2) in &b.v_comp {
            v_comp.insert((vc(f1, f2), vc(g1, g2)), vc(c1, c2));
        }
    }
    let mut sq_h_comp = BTreeMap::new();
    for (&(s1, t1), &c1) in &a.sq_h_comp {
        for (&(s2, t2), &c2) in &b.sq_h_comp {
            sq_h_comp.insert((sq(s1, s2), sq(t1, t2)), sq(c1, c2));
        }
    }
    let mut sq_v_comp = BTreeMap::new();
    for (&(s1, t1), &c1) in &a.sq_v_comp {
        for (&(s2, t2), &c2) in &b.sq_v_comp {
            sq_v_comp.insert((sq(s1, s2), sq(t1, t2)), sq(c1, c2));
        }
    }
    FiniteDoubleCategory {
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
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        for (name, d) in [
            ("empty", FiniteDoubleCategory::empty()),
            ("terminal", terminal()),
            ("generator", generator()),
            ("free-arrow-h", free_arrow_h()),
            ("free-arrow-v", free_arrow_v()),
            ("product", product(&generator(), &free_arrow_h())),
            ("transpose", transpose(&generator())),
            ("discrete", discrete(3)),
            ("cyclic-shell", monoid_shell(&cyclic_table(2), &cyclic_table(3), 2)),
            ("thin-shell", monoid_shell(&left_zero_table(3), &left_zero_table(3), 1)),
        ] {
            if let Err(errs) = d.validate() {
                panic!("{name} failed validation: {errs:?}");
            }
        }
    }

    #[test]
    fn fixture_cell_counts() {
        let t = terminal();
        assert_eq!(
            (t.objects.len(), t.hcells.len(), t.vcells.len(), t.squares.len()),
            (1, 1, 1, 1)
        );
        let g = generator();
        assert_eq!(
            (g.objects.len(), g.hcells.len(), g.vcells.len(), g.squares.len()),
            (4, 6, 6, 9)
        );
        let a = free_arrow_h();
        assert_eq!(
            (a.objects.len(), a.hcells.len(), a.vcells.len(), a.squares.len()),
            (2, 3, 2, 3)
        );
        let p = product(&g, &a);
        assert_eq!(
            (p.objects.len(), p.hcells.len(), p.vcells.len(), p.squares.len()),
            (8, 18, 12, 27)
        );
    }
}

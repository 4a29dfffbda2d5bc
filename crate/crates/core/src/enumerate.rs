//! Exhaustive enumeration of small Γ-hemirings.
//!
//! Commutative monoids with neutral element 0 are generated first, for both
//! carriers; ternary product tables are then filled entry by entry, pruning a
//! branch as soon as a fully determined axiom instance fails. Entries with a
//! zero factor or `0_Gamma` are forced to zero and never branched on.

use crate::hemiring::{GammaHemiring, RawTables};

const UNSET: usize = usize::MAX;

/// All commutative monoid tables on `0..n` with neutral element 0, lexicographic.
pub fn commutative_monoids(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut table = vec![vec![UNSET; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = i;
    }
    if let Some(first) = table.first_mut() {
        *first = (0..n).collect();
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill_monoid(&mut table, &cells, 0, &mut out);
    out
}

fn monoid_consistent(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b][c];
                if bc == UNSET {
                    continue;
                }
                let (l, r) = (t[ab][c], t[a][bc]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn fill_monoid(t: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], k: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    if k == cells.len() {
        out.push(t.clone());
        return;
    }
    let (i, j) = cells[k];
    let n = t.len();
    for v in 0..n {
        t[i][j] = v;
        t[j][i] = v;
        if monoid_consistent(t) {
            fill_monoid(t, cells, k + 1, out);
        }
    }
    t[i][j] = UNSET;
    t[j][i] = UNSET;
}

struct ProductSearch<'a> {
    s: usize,
    g: usize,
    s_add: &'a [Vec<usize>],
    g_add: &'a [Vec<usize>],
    prod: Vec<usize>,
    cells: Vec<usize>,
}

impl ProductSearch<'_> {
    fn at(&self, a: usize, al: usize, b: usize) -> usize {
        self.prod[(a * self.g + al) * self.s + b]
    }

    fn add(&self, a: usize, b: usize) -> usize {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            self.s_add[a][b]
        }
    }

    fn mul(&self, a: usize, al: usize, b: usize) -> usize {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            self.at(a, al, b)
        }
    }

    /// No fully evaluable instance of axioms (i)-(iv) fails.
    fn consistent(&self) -> bool {
        let differ = |l: usize, r: usize| l != UNSET && r != UNSET && l != r;
        let (s, g) = (self.s, self.g);
        for a in 0..s {
            for al in 0..g {
                for b in 0..s {
                    let ab = self.at(a, al, b);
                    for c in 0..s {
                        // (i) and (ii)
                        let l = self.mul(self.s_add[a][b], al, c);
                        let r = self.add(self.at(a, al, c), self.at(b, al, c));
                        if differ(l, r) {
                            return false;
                        }
                        let l = self.mul(a, al, self.s_add[b][c]);
                        let r = self.add(ab, self.at(a, al, c));
                        if differ(l, r) {
                            return false;
                        }
                    }
                    for be in 0..g {
                        // (iii)
                        let l = self.at(a, self.g_add[al][be], b);
                        let r = self.add(ab, self.at(a, be, b));
                        if differ(l, r) {
                            return false;
                        }
                        // (iv)
                        for c in 0..s {
                            let l = self.mul(a, al, self.at(b, be, c));
                            let r = self.mul(ab, be, c);
                            if differ(l, r) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == self.cells.len() {
            out.push(self.prod.clone());
            return;
        }
        let cell = self.cells[k];
        for v in 0..self.s {
            self.prod[cell] = v;
            if self.consistent() {
                self.run(k + 1, out);
            }
        }
        self.prod[cell] = UNSET;
    }
}

fn product_tables(s_add: &[Vec<usize>], g_add: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (s, g) = (s_add.len(), g_add.len());
    let mut prod = vec![0; s * g * s];
    let mut cells = Vec::new();
    for a in 1..s {
        for al in 1..g {
            for b in 1..s {
                let idx = (a * g + al) * s + b;
                prod[idx] = UNSET;
                cells.push(idx);
            }
        }
    }
    let mut search = ProductSearch { s, g, s_add, g_add, prod, cells };
    let mut out = Vec::new();
    search.run(0, &mut out);
    out
}

fn unflatten(s: usize, g: usize, flat: &[usize]) -> Vec<Vec<Vec<usize>>> {
    flat.chunks(g * s).map(|plane| plane.chunks(s).map(<[usize]>::to_vec).collect()).collect()
}

/// Every Γ-hemiring with `s_size <= s_max` and `g_size <= g_max`, in
/// lexicographic order of (sizes, S table, Γ table, product table).
/// Isomorphic copies are all kept.
pub fn enumerate_hemirings(s_max: usize, g_max: usize) -> impl Iterator<Item = GammaHemiring> {
    (1..=s_max).flat_map(move |s| {
        (1..=g_max).flat_map(move |g| {
            let s_monoids = commutative_monoids(s);
            let g_monoids = commutative_monoids(g);
            let mut out = Vec::new();
            let mut serial = 0usize;
            for sa in &s_monoids {
                for ga in &g_monoids {
                    for prod in product_tables(sa, ga) {
                        let raw = RawTables {
                            name: format!("s{s}g{g}-{serial}"),
                            s_size: s,
                            g_size: g,
                            s_add: sa.clone(),
                            g_add: ga.clone(),
                            product: unflatten(s, g, &prod),
                        };
                        serial += 1;
                        out.push(GammaHemiring::new(raw).expect("enumerated tables satisfy every axiom"));
                    }
                }
            }
            out
        })
    })
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 1, &mut out);
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k >= p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Table contents relabelled by `ps` on S and `pg` on Γ, flattened for comparison.
fn relabel(raw: &RawTables, ps: &[usize], pg: &[usize]) -> Vec<usize> {
    let (s, g) = (raw.s_size, raw.g_size);
    let mut inv_s = vec![0; s];
    let mut inv_g = vec![0; g];
    for (i, &p) in ps.iter().enumerate() {
        inv_s[p] = i;
    }
    for (i, &p) in pg.iter().enumerate() {
        inv_g[p] = i;
    }
    let mut key = Vec::with_capacity(s * s + g * g + s * g * s);
    for a in 0..s {
        for b in 0..s {
            key.push(ps[raw.s_add[inv_s[a]][inv_s[b]]]);
        }
    }
    for a in 0..g {
        for b in 0..g {
            key.push(pg[raw.g_add[inv_g[a]][inv_g[b]]]);
        }
    }
    for a in 0..s {
        for al in 0..g {
            for b in 0..s {
                key.push(ps[raw.product[inv_s[a]][inv_g[al]][inv_s[b]]]);
            }
        }
    }
    key
}

/// Whether `h` is the lexicographically least relabelling of itself
/// (zeros fixed). Keeping only canonical structures drops isomorphic copies.
pub fn is_canonical(h: &GammaHemiring) -> bool {
    let raw = h.to_raw();
    let own = relabel(&raw, &(0..raw.s_size).collect::<Vec<_>>(), &(0..raw.g_size).collect::<Vec<_>>());
    let ps = permutations_fixing_zero(raw.s_size);
    let pg = permutations_fixing_zero(raw.g_size);
    ps.iter().all(|p| pg.iter().all(|q| relabel(&raw, p, q) >= own))
}

use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::matrix::{int, zeros, IntMatrix};
use crate::nil2::{FreeWord, PointedSet};

use super::finite::FiniteGroup;

const NONE: usize = usize::MAX;

/// A finitely presented group `⟨E | R⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedGroup {
    pub gens: PointedSet,
    pub relators: Vec<FreeWord>,
}

impl PresentedGroup {
    /// Exact abelianization from the exponent-sum matrix.
    pub fn abelianization(&self) -> FinAbGroup {
        let k = self.gens.len();
        let rows = self
            .relators
            .iter()
            .map(|w| {
                let mut v = zeros(k);
                for &(i, e) in &w.letters {
                    v[i] += int(e as i64);
                }
                v
            })
            .collect();
        FinAbGroup::new(k, IntMatrix::from_rows(k, rows))
    }

    /// Coset enumeration over the trivial subgroup, giving the regular representation.
    pub fn enumerate(&self, cap: usize) -> Result<CosetTable> {
        Enumerator::new(self.gens.len(), cap).run(&self.relators)
    }

    /// Removes generators that a relator of the form `x`, `x^-1` or `x^±1 y^±1` identifies with
    /// another; returns the surviving generator count when no relators remain, i.e. the group is free.
    pub fn free_rank_if_free(&self) -> Option<usize> {
        let k = self.gens.len();
        let mut parent: Vec<usize> = (0..=k).collect(); // k is the identity
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for w in &self.relators {
            let w = w.reduced();
            match w.letters.as_slice() {
                [] => {}
                [(x, _)] => {
                    let a = find(&mut parent, *x);
                    let b = find(&mut parent, k);
                    parent[a] = b;
                }
                // x^a y^b with opposite signs identifies x with y
                [(x, a), (y, b)] if a == &-b => {
                    let p = find(&mut parent, *x);
                    let q = find(&mut parent, *y);
                    if p == k {
                        parent[q] = k;
                    } else if q == k {
                        parent[p] = k;
                    } else if p != q {
                        parent[p.max(q)] = p.min(q);
                    }
                }
                _ => return None,
            }
        }
        let idc = find(&mut parent, k);
        Some((0..k).filter(|&x| find(&mut parent, x) == x && x != idc).count())
    }
}

/// A complete coset table; coset 0 is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetTable {
    ngens: usize,
    // table[c][2i] = c·x_i, table[c][2i+1] = c·x_i⁻¹
    table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn trace(&self, start: usize, w: &FreeWord) -> usize {
        w.letters.iter().fold(start, |c, &(i, e)| self.table[c][2 * i + usize::from(e < 0)])
    }

    /// A word reaching each coset from 0.
    pub fn representatives(&self) -> Vec<FreeWord> {
        let mut reps: Vec<Option<FreeWord>> = vec![None; self.order()];
        reps[0] = Some(FreeWord::default());
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let c = queue[i];
            i += 1;
            for col in 0..2 * self.ngens {
                let d = self.table[c][col];
                if reps[d].is_none() {
                    let letter = (col / 2, if col % 2 == 0 { 1 } else { -1 });
                    let mut w = reps[c].clone().unwrap();
                    w.letters.push(letter);
                    reps[d] = Some(w);
                    queue.push(d);
                }
            }
        }
        reps.into_iter().map(|w| w.expect("table is connected")).collect()
    }

    pub fn to_group(&self) -> FiniteGroup {
        let reps = self.representatives();
        let n = self.order();
        let table = (0..n).map(|a| (0..n).map(|b| self.trace(a, &reps[b])).collect()).collect();
        FiniteGroup::new((0..n).map(|c| format!("c{}", c)).collect(), table).expect("regular representation")
    }
}

struct Enumerator {
    ngens: usize,
    cap: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Enumerator {
    fn new(ngens: usize, cap: usize) -> Self {
        Enumerator { ngens, cap, table: vec![vec![NONE; 2 * ngens]], parent: vec![0] }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.table.len() >= self.cap {
            return Err(Error::H0Undecidable { cap: self.cap as u64 });
        }
        let d = self.table.len();
        self.table.push(vec![NONE; 2 * self.ngens]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inv_col(x)] = c;
        Ok(())
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..2 * self.ngens {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                self.table[f][inv_col(x)] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][inv_col(x)] != NONE {
                    let t = self.table[f1][inv_col(x)];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv_col(x)] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.table[f][w[i as usize]] != NONE {
                f = self.table[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv_col(w[j as usize])] != NONE {
                b = self.table[b][inv_col(w[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                let x = w[i as usize];
                self.table[f][x] = b;
                self.table[b][inv_col(x)] = f;
                return Ok(());
            } else {
                self.define(f, w[i as usize])?;
            }
        }
    }

    fn run(mut self, relators: &[FreeWord]) -> Result<CosetTable> {
        let rels: Vec<Vec<usize>> = relators
            .iter()
            .map(|r| r.reduced().letters.iter().map(|&(g, e)| 2 * g + usize::from(e < 0)).collect())
            .collect();
        let mut c = 0;
        while c < self.table.len() {
            for r in &rels {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            if self.live(c) {
                for x in 0..2 * self.ngens {
                    if self.table[c][x] == NONE {
                        self.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.live(c)).collect();
        let mut index = vec![NONE; self.table.len()];
        for (i, &c) in live.iter().enumerate() {
            index[c] = i;
        }
        let table = live.iter().map(|&c| self.table[c].iter().map(|&d| index[d]).collect()).collect();
        Ok(CosetTable { ngens: self.ngens, table })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::new(letters.to_vec())
    }

    #[test]
    fn small_groups() {
        let s = PointedSet::with(&["a", "b"]);
        // S3 = <a, b | a^2, b^3, (ab)^2>
        let g = PresentedGroup {
            gens: s.clone(),
            relators: vec![w(&[(0, 1), (0, 1)]), w(&[(1, 1), (1, 1), (1, 1)]), w(&[(0, 1), (1, 1), (0, 1), (1, 1)])],
        };
        let t = g.enumerate(1000).unwrap();
        assert_eq!(t.order(), 6);
        assert!(!t.to_group().is_abelian());
        assert!(g.abelianization().is_isomorphic(&FinAbGroup::cyclic(2)));
        // Q8 = <a, b | a^4, a^2 b^-2, b^-1 a b a>
        let q = PresentedGroup {
            gens: s.clone(),
            relators: vec![
                w(&[(0, 1); 4]),
                w(&[(0, 1), (0, 1), (1, -1), (1, -1)]),
                w(&[(1, -1), (0, 1), (1, 1), (0, 1)]),
            ],
        };
        assert_eq!(q.enumerate(1000).unwrap().order(), 8);
        let z = PresentedGroup { gens: PointedSet::with(&["a"]), relators: vec![] };
        assert!(matches!(z.enumerate(100), Err(Error::H0Undecidable { cap: 100 })));
        assert_eq!(z.free_rank_if_free(), Some(1));
    }

    #[test]
    fn free_detection() {
        let s = PointedSet::with(&["a", "b", "c"]);
        let g = PresentedGroup { gens: s, relators: vec![w(&[(0, -1), (1, 1)]), w(&[(2, 1)])] };
        assert_eq!(g.free_rank_if_free(), Some(1));
        assert!(g.abelianization().is_isomorphic(&FinAbGroup::free(1)));
    }
}

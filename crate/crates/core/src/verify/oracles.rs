//! Slow reference implementations used to cross-check the main algorithms.

use std::collections::BTreeMap;

use crate::matrix::{int, Int};
use crate::nil2::{free_nil, wedge_index, wedge_rank, Class2Elem, Class2Group, FreeWord};
use crate::tracks::HopfTrack;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Sym {
    Letter(usize, i64),
    /// `[x_i, x_j]^e` with `i < j`.
    Comm(usize, usize, i64),
}

/// Normal form of a free word in `⟨x_1..x_k⟩_nil` by literal rewriting: free reduction,
/// commutators float to the right, and out-of-order neighbours are swapped with
/// `x_a^s x_b^t = x_b^t x_a^s [x_a, x_b]^{st}`.
///
/// Returns the exponents of the letters and of `[x_i, x_j]` (`i < j`) in `Λ²` order.
pub fn nil_normal_form(w: &FreeWord, k: usize) -> (Vec<Int>, Vec<Int>) {
    let mut syms: Vec<Sym> = w.letters.iter().map(|&(i, e)| Sym::Letter(i, e as i64)).collect();
    loop {
        let mut changed = false;
        // free reduction
        let mut out: Vec<Sym> = Vec::with_capacity(syms.len());
        for s in syms.drain(..) {
            match (out.last().copied(), s) {
                (Some(Sym::Letter(i, e)), Sym::Letter(j, f)) if i == j => {
                    out.pop();
                    changed = true;
                    if e + f != 0 {
                        out.push(Sym::Letter(i, e + f));
                    }
                }
                _ => out.push(s),
            }
        }
        syms = out;
        // commutators are central
        if let Some(p) = (0..syms.len().saturating_sub(1))
            .find(|&p| matches!(syms[p], Sym::Comm(..)) && matches!(syms[p + 1], Sym::Letter(..)))
        {
            syms.swap(p, p + 1);
            continue;
        }
        // one bubble-sort step on letters
        if let Some(p) = (0..syms.len().saturating_sub(1)).find(|&p| {
            matches!((syms[p], syms[p + 1]), (Sym::Letter(a, _), Sym::Letter(b, _)) if a > b)
        }) {
            let (Sym::Letter(a, s), Sym::Letter(b, t)) = (syms[p], syms[p + 1]) else { unreachable!() };
            syms[p] = Sym::Letter(b, t);
            syms[p + 1] = Sym::Letter(a, s);
            // [x_a, x_b] = [x_b, x_a]^{-1}
            syms.insert(p + 2, Sym::Comm(b, a, -s * t));
            continue;
        }
        if !changed {
            break;
        }
    }
    let mut q = vec![int(0); k];
    let mut c: BTreeMap<usize, Int> = BTreeMap::new();
    for s in syms {
        match s {
            Sym::Letter(i, e) => q[i] += int(e),
            Sym::Comm(i, j, e) => *c.entry(wedge_index(k, i, j)).or_insert_with(|| int(0)) += int(e),
        }
    }
    let mut cv = vec![int(0); wedge_rank(k)];
    for (i, e) in c {
        cv[i] = e;
    }
    (q, cv)
}

/// `∂(Σ c_ij e_i ⊗ e_j) = Π [x_i, x_j]^{c_ij}` computed by group operations in `g`,
/// whose first `k` generators are the letters.
pub fn boundary_by_commutators(g: &Class2Group, coeffs: &[Int]) -> Class2Elem {
    let k = g.k();
    let mut acc = g.identity();
    for i in 0..k {
        for j in 0..k {
            let c = g.commutator(&g.gen(i), &g.gen(j));
            acc = g.mul(&acc, &g.pow(&c, &coeffs[i * k + j]));
        }
    }
    acc
}

/// `ψ(x) = φ(x) + ∂α({x})` on every letter, with `∂` computed by [`boundary_by_commutators`].
pub fn hopf_condition_holds(h: &HopfTrack) -> bool {
    let (ga, gb) = (free_nil(&h.a), free_nil(&h.b));
    (0..h.a.len()).all(|i| {
        let x = ga.gen(i);
        let d = boundary_by_commutators(&gb, &h.alpha.apply(&x.q));
        gb.mul(&h.source.apply(&x), &d) == h.target.apply(&x)
    })
}

/// `(π_1 k)_{ab}` read off from letter exponent sums of the defining words.
pub fn abelianized_words(words: &[FreeWord], k: usize) -> Vec<Vec<Int>> {
    words
        .iter()
        .map(|w| {
            let mut v = vec![int(0); k];
            for &(i, e) in &w.letters {
                v[i] += int(e as i64);
            }
            v
        })
        .collect()
}

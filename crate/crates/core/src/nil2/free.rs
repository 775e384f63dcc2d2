use std::fmt;

use rand::Rng;

use crate::abelian::{AbMap, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{int, unit, zeros, Int, IntMatrix};
use crate::quadratic;

use super::{Class2Elem, Class2Group, Class2Hom};

/// A finite set with a basepoint; free constructions kill the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedSet {
    base: String,
    elems: Vec<String>,
}

impl PointedSet {
    pub fn new(base: &str, elems: &[&str]) -> Result<Self> {
        Self::from_strings(base.to_string(), elems.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_strings(base: String, elems: Vec<String>) -> Result<Self> {
        for (i, e) in elems.iter().enumerate() {
            if *e == base {
                return Err(Error::Invalid(format!("basepoint {} listed as an element", base)));
            }
            if elems[..i].contains(e) {
                return Err(Error::Invalid(format!("duplicate symbol {}", e)));
            }
        }
        Ok(PointedSet { base, elems })
    }

    /// `{*, e_1, ..., e_k}` with the given non-base symbols.
    pub fn with(elems: &[&str]) -> Self {
        Self::new("*", elems).expect("distinct symbols")
    }

    /// `{*, x1, ..., xk}`.
    pub fn numbered(k: usize) -> Self {
        Self::from_strings("*".into(), (1..=k).map(|i| format!("x{}", i)).collect()).unwrap()
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    /// Non-base symbols in order.
    pub fn elems(&self) -> &[String] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Index among the non-base symbols; `Ok(None)` for the basepoint.
    pub fn index(&self, sym: &str) -> Result<Option<usize>> {
        if sym == self.base {
            return Ok(None);
        }
        self.elems
            .iter()
            .position(|e| e == sym)
            .map(Some)
            .ok_or_else(|| Error::UnknownName(sym.to_string()))
    }
}

/// A word in the free group on a pointed set; letters index non-base symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    pub letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        FreeWord { letters }
    }

    pub fn letter(i: usize) -> Self {
        FreeWord { letters: vec![(i, 1)] }
    }

    /// Builds a word from symbols; basepoint letters are dropped.
    pub fn from_symbols(set: &PointedSet, syms: &[(&str, i8)]) -> Result<Self> {
        let mut letters = Vec::new();
        for (s, e) in syms {
            if let Some(i) = set.index(s)? {
                letters.push((i, *e));
            }
        }
        Ok(FreeWord { letters })
    }

    pub fn reduced(&self) -> FreeWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            if let Some(&(g2, e2)) = out.last() {
                if g2 == g && e2 == -e {
                    out.pop();
                    continue;
                }
            }
            out.push((g, e));
        }
        FreeWord { letters: out }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord { letters: self.letters.iter().chain(&other.letters).copied().collect() }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// `u⁻¹ v⁻¹ u v`.
    pub fn commutator(u: &FreeWord, v: &FreeWord) -> FreeWord {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }

    pub fn random<R: Rng>(rng: &mut R, ngens: usize, max_len: usize) -> FreeWord {
        let len = rng.gen_range(0..=max_len);
        FreeWord {
            letters: (0..len).map(|_| (rng.gen_range(0..ngens), if rng.gen_bool(0.5) { 1 } else { -1 })).collect(),
        }
    }

    pub fn display(&self, set: &PointedSet) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(g, e)| if e == 1 { set.elems[g].clone() } else { format!("{}^-1", set.elems[g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Index of `e_i ∧ e_j` (`i < j`) in `Λ²Z^k`.
pub fn wedge_index(k: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < k);
    i * k - i * (i + 1) / 2 + (j - i - 1)
}

pub fn wedge_rank(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// The free nilpotent group of class two on `A − {*}`.
///
/// The central layer is `Λ²Z[A]` with `λ(e_i, e_j) = e_i ∧ e_j` for `i < j`.
pub fn free_nil(a: &PointedSet) -> Class2Group {
    let k = a.len();
    let m = wedge_rank(k);
    let mut lambda = vec![vec![zeros(m); k]; k];
    let mut cnames = Vec::with_capacity(m);
    for i in 0..k {
        for j in i + 1..k {
            let w = wedge_index(k, i, j);
            lambda[i][j] = unit(m, w);
            lambda[j][i] = crate::matrix::vec_neg(&unit(m, w));
            cnames.push(format!("[{},{}]", a.elems[i], a.elems[j]));
        }
    }
    Class2Group::new(a.elems.clone(), vec![int(0); k], vec![zeros(m); k], FinAbGroup::free(m), cnames, lambda)
        .expect("free nil-group data is consistent")
}

/// [`free_nil`] on symbols, basepoint `*`.
pub fn free_nil_on(elems: &[&str]) -> Class2Group {
    free_nil(&PointedSet::with(elems))
}

/// Image of a free word in a class-2 group whose outer generators are the letters.
pub fn nilize(w: &FreeWord, g: &Class2Group) -> Result<Class2Elem> {
    let mut acc = g.identity();
    for &(i, e) in &w.letters {
        if i >= g.k() {
            return Err(Error::UnknownName(format!("generator index {}", i)));
        }
        let x = g.gen(i);
        let x = if e > 0 { x } else { g.inv(&x) };
        acc = g.mul(&acc, &x);
    }
    Ok(acc)
}

/// The nil-group map induced by sending each letter of `A` to a word.
pub fn nil_hom_from_words(
    source: &PointedSet,
    target: &Class2Group,
    words: &[FreeWord],
) -> Result<Class2Hom> {
    let g = free_nil(source);
    let mut images = Vec::with_capacity(g.ngens());
    for w in words {
        images.push(nilize(w, target)?);
    }
    let k = source.len();
    for i in 0..k {
        for j in i + 1..k {
            images.push(target.commutator(&images[i], &images[j]));
        }
    }
    Class2Hom::new(g, target.clone(), images)
}

/// The free-nil map determined by arbitrary images of the basis letters.
pub fn hom_from_free(g: &Class2Group, target: &Class2Group, letter_images: Vec<Class2Elem>) -> Result<Class2Hom> {
    let k = g.k();
    if letter_images.len() != k {
        return Err(Error::Shape("one image per basis letter".into()));
    }
    let mut images = letter_images;
    for i in 0..k {
        for j in i + 1..k {
            let c = target.commutator(&images[i], &images[j]);
            images.push(c);
        }
    }
    Class2Hom::new(g.clone(), target.clone(), images)
}

/// `Z[A]`, the free abelian group on `A − {*}`.
pub fn free_abelian(a: &PointedSet) -> FinAbGroup {
    FinAbGroup::free(a.len())
}

/// The commutator boundary `⊗²_n Z[A] → ⟨A⟩_nil`, `x ⊗ y ↦ [x, y]`, landing in the central layer.
pub fn boundary(n: u32, a: &PointedSet) -> Result<Class2Hom> {
    let k = a.len();
    let src = quadratic::tensor_square_n(n, &free_abelian(a))?;
    let g = free_nil(a);
    let mut images = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            images.push(g.commutator(&g.gen(i), &g.gen(j)));
        }
    }
    let names = (0..k * k)
        .map(|idx| format!("{}*{}", a.elems[idx / k], a.elems[idx % k]))
        .collect();
    Class2Hom::new(Class2Group::from_abelian(&src, names), g, images)
}

/// The four-term sequence `Γ_n Z[A] → ⊗²_n Z[A] → ⟨A⟩_nil → Z[A]` with exactness verdicts.
#[derive(Clone, Debug)]
pub struct GammaSequence {
    pub gamma_incl: AbMap,
    pub boundary: Class2Hom,
    pub abelianize: Class2Hom,
    /// Injectivity of the first map.
    pub exact_at_gamma: bool,
    /// `ker ∂ = im Γ_n`.
    pub exact_at_tensor: bool,
    /// `ker(ab) = im ∂` inside the nil-group.
    pub exact_at_nil: bool,
    /// Surjectivity of the abelianization.
    pub exact_at_free: bool,
}

impl GammaSequence {
    pub fn is_exact(&self) -> bool {
        self.exact_at_gamma && self.exact_at_tensor && self.exact_at_nil && self.exact_at_free
    }
}

pub fn gamma_sequence(n: u32, a: &PointedSet) -> Result<GammaSequence> {
    let k = a.len();
    let za = free_abelian(a);
    let gamma_incl = quadratic::gamma_n_inclusion(n, &za)?;
    let del = boundary(n, a)?;
    let g = del.target.clone();
    let zag = Class2Group::from_abelian(&za, a.elems.clone());
    let ab_images = (0..g.ngens())
        .map(|i| zag.from_central(&if i < k { unit(k, i) } else { zeros(k) }))
        .collect();
    let abelianize = Class2Hom::new(g.clone(), zag, ab_images)?;

    let exact_at_gamma = gamma_incl.is_injective();
    // ∂ as a linear map into the central layer
    let del_lin = AbMap::new(
        gamma_incl.target.clone(),
        g.central().clone(),
        IntMatrix::from_cols(g.m(), del.images().iter().map(|x| x.c.clone()).collect()),
    )?;
    let lands_central = del.images().iter().all(|x| crate::matrix::is_zero_vec(&x.q));
    let exact_at_tensor = lands_central && crate::abelian::is_exact_at(&gamma_incl, &del_lin);
    let composite_trivial = del.then(&abelianize).is_trivial();
    let kernel = super::kernel(&abelianize)?;
    let img: Vec<_> = del_lin.image_gens();
    let exact_at_nil = composite_trivial
        && kernel.incl.images().iter().all(|x| {
            crate::matrix::is_zero_vec(&x.q) && g.central().in_subgroup(&x.c, &img)
        });
    let exact_at_free = (0..k).all(|i| abelianize.apply(&g.gen(i)) == abelianize.target.gen(i));
    Ok(GammaSequence { gamma_incl, boundary: del, abelianize, exact_at_gamma, exact_at_tensor, exact_at_nil, exact_at_free })
}

impl fmt::Display for PointedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}", self.base)?;
        for e in &self.elems {
            write!(f, ", {}", e)?;
        }
        write!(f, "}}")
    }
}

/// `w^e` as a word.
pub fn word_power(w: &FreeWord, e: &Int) -> FreeWord {
    let n = i64::try_from(e).expect("small exponent");
    let base = if n < 0 { w.inverse() } else { w.clone() };
    (0..n.abs()).fold(FreeWord::default(), |acc, _| acc.concat(&base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;

    #[test]
    fn wedge_index_is_a_bijection() {
        for k in 0..6 {
            let mut idx = 0;
            for i in 0..k {
                for j in i + 1..k {
                    assert_eq!(wedge_index(k, i, j), idx);
                    idx += 1;
                }
            }
            assert_eq!(idx, wedge_rank(k));
        }
    }

    #[test]
    fn free_nil_layers() {
        let g1 = free_nil_on(&["a"]);
        assert_eq!((g1.k(), g1.m()), (1, 0));
        let g2 = free_nil_on(&["a", "b"]);
        assert_eq!(g2.m(), 1);
        assert_eq!(free_nil_on(&["a", "b", "c"]).m(), 3);
    }

    #[test]
    fn nilize_examples() {
        let a = PointedSet::with(&["a", "b", "c"]);
        let g = free_nil(&a);
        let comm = FreeWord::from_symbols(&a, &[("a", 1), ("b", 1), ("a", -1), ("b", -1)]).unwrap();
        let x = nilize(&comm, &g).unwrap();
        assert_eq!(x.q, ints(&[0, 0, 0]));
        // a b a^-1 b^-1 = [a^-1, b^-1] = [a, b]
        assert_eq!(x.c, ints(&[1, 0, 0]));
        let aba = FreeWord::from_symbols(&a, &[("a", 1), ("b", 1), ("a", 1)]).unwrap();
        let y = nilize(&aba, &g).unwrap();
        assert_eq!(y.q, ints(&[2, 1, 0]));
        assert_eq!(y.c, ints(&[-1, 0, 0]));
        let ab = FreeWord::commutator(&FreeWord::letter(0), &FreeWord::letter(1));
        let triple = FreeWord::commutator(&ab, &FreeWord::letter(2));
        assert!(g.is_identity(&nilize(&triple, &g).unwrap()));
    }

    #[test]
    fn basepoint_letters_vanish() {
        let a = PointedSet::with(&["a"]);
        let w = FreeWord::from_symbols(&a, &[("*", 1), ("a", 1), ("*", -1)]).unwrap();
        assert_eq!(w, FreeWord::letter(0));
        assert!(FreeWord::from_symbols(&a, &[("z", 1)]).is_err());
    }

    #[test]
    fn boundary_values() {
        let a = PointedSet::with(&["a", "b"]);
        let d = boundary(2, &a).unwrap();
        assert_eq!(d.image_of_gen(1).c, ints(&[1]));
        assert_eq!(d.image_of_gen(2).c, ints(&[-1]));
        assert!(d.target.is_identity(d.image_of_gen(0)));
        let one = PointedSet::with(&["a"]);
        assert!(boundary(3, &one).unwrap().is_trivial());
    }

    #[test]
    fn small_gamma_sequences_are_exact() {
        for n in 2..4 {
            for k in 0..3 {
                let s = gamma_sequence(n, &PointedSet::numbered(k)).unwrap();
                assert!(s.is_exact(), "n={} k={} {:?}", n, k, s);
            }
        }
    }
}

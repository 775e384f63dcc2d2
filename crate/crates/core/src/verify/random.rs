use rand::Rng;

use crate::abelian::AbMap;
use crate::cross::CrossMorphism;
use crate::error::Result;
use crate::functors::phi_morphism;
use crate::matrix::{int, IntMatrix};
use crate::nil2::{boundary, free_abelian, free_nil, hom_from_free, nil_hom_from_words, Class2Hom, FreeWord, PointedSet};
use crate::quadratic;
use crate::tracks::{HopfTrack, TwoMorphism};

use super::fixtures::wedge_morphism;

pub fn random_words<R: Rng>(rng: &mut R, nletters: usize, count: usize, max_len: usize) -> Vec<FreeWord> {
    (0..count).map(|_| FreeWord::random(rng, nletters, max_len)).collect()
}

/// A random morphism of wedge models at level `n` with `1..=max_k` letters on each side.
pub fn random_wedge_morphism<R: Rng>(rng: &mut R, n: u32, max_k: usize) -> Result<CrossMorphism> {
    let ka = rng.gen_range(1..=max_k);
    let kb = rng.gen_range(1..=max_k);
    let (a, b) = (PointedSet::numbered(ka), PointedSet::numbered(kb));
    let words = random_words(rng, kb, ka, 3);
    wedge_morphism(n, &a, &b, &words)
}

fn random_pair<R: Rng>(rng: &mut R, max_k: usize) -> (PointedSet, PointedSet) {
    (PointedSet::numbered(rng.gen_range(1..=max_k)), PointedSet::numbered(rng.gen_range(1..=max_k)))
}

/// A random map `⟨A⟩_nil → ⟨B⟩_nil` given by words of length at most 3.
pub fn random_nil_map<R: Rng>(rng: &mut R, a: &PointedSet, b: &PointedSet) -> Result<Class2Hom> {
    let words = random_words(rng, b.len(), a.len(), 3);
    nil_hom_from_words(a, &free_nil(b), &words)
}

/// A random `α: Z[A] → ⊗²_n Z[B]` with entries in `-2..=2`.
pub fn random_alpha<R: Rng>(rng: &mut R, n: u32, a: &PointedSet, b: &PointedSet) -> Result<AbMap> {
    let t = quadratic::tensor_square_n(n, &free_abelian(b))?;
    let cols = (0..a.len()).map(|_| (0..t.ngens()).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
    AbMap::new(free_abelian(a), t.clone(), IntMatrix::from_cols(t.ngens(), cols))
}

/// The target `ψ = φ + ∂α` of the track with Hopf invariant `α` out of `φ`.
pub fn track_target(n: u32, a: &PointedSet, b: &PointedSet, phi: &Class2Hom, alpha: &AbMap) -> Result<Class2Hom> {
    let del = boundary(n, b)?;
    let g = free_nil(b);
    let letters = (0..a.len())
        .map(|i| {
            let x = free_nil(a).gen(i);
            g.mul(&phi.apply(&x), &del.apply(&del.source.from_central(&alpha.apply(&x.q))))
        })
        .collect();
    hom_from_free(&free_nil(a), &g, letters)
}

/// A random track between maps `⟨A⟩_nil → ⟨B⟩_nil` with `1..=max_k` letters on each side.
pub fn random_hopf_track<R: Rng>(rng: &mut R, n: u32, max_k: usize) -> Result<HopfTrack> {
    let (a, b) = random_pair(rng, max_k);
    random_hopf_track_on(rng, n, &a, &b)
}

pub fn random_hopf_track_on<R: Rng>(rng: &mut R, n: u32, a: &PointedSet, b: &PointedSet) -> Result<HopfTrack> {
    let phi = random_nil_map(rng, a, b)?;
    let alpha = random_alpha(rng, n, a, b)?;
    let psi = track_target(n, a, b, &phi, &alpha)?;
    HopfTrack::new(n, a, b, phi, psi, alpha)
}

/// A random 2-morphism out of `f`, with letter values drawn from the top group of the target.
pub fn random_two_morphism<R: Rng>(rng: &mut R, f: &CrossMorphism) -> Result<TwoMorphism> {
    let m = f.target().top()?.clone();
    let k = match f.source().base()? {
        crate::cross::Base::Nil(g) => g.k(),
        crate::cross::Base::Free(w) => w.len(),
    };
    let letters = (0..k).map(|_| m.random_elem(rng, 2)).collect();
    TwoMorphism::from_values(f, TwoMorphism::letter_values(f, letters)?)
}

/// Two horizontally composable random 2-morphisms `α: f ⇒ g` (X → Y) and `α': f' ⇒ g'` (Y → Z)
/// between wedge models at level `n ≥ 2`, or their crossed-module images for `crossed = true`.
pub fn random_square<R: Rng>(rng: &mut R, n: u32, max_k: usize, crossed: bool) -> Result<(TwoMorphism, TwoMorphism)> {
    let sets: Vec<PointedSet> = (0..3).map(|_| PointedSet::numbered(rng.gen_range(1..=max_k))).collect();
    let w1 = random_words(rng, sets[1].len(), sets[0].len(), 3);
    let w2 = random_words(rng, sets[2].len(), sets[1].len(), 3);
    let mut f = wedge_morphism(n, &sets[0], &sets[1], &w1)?;
    let mut f2 = wedge_morphism(n, &sets[1], &sets[2], &w2)?;
    if crossed {
        f = phi_morphism(&f)?;
        f2 = phi_morphism(&f2)?;
    }
    Ok((random_two_morphism(rng, &f)?, random_two_morphism(rng, &f2)?))
}

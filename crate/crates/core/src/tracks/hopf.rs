use crate::abelian::{AbElem, AbMap, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::nil2::{boundary, free_abelian, free_nil, Class2Hom, PointedSet};
use crate::quadratic;

/// The sign relating the Hopf invariant of a track to the classical Hopf invariant of a map:
/// `classical = CLASSICAL_HOPF_SIGN · Hopf`.
pub const CLASSICAL_HOPF_SIGN: i64 = -1;

/// A track `Σ^{n-1}φ ⇒ Σ^{n-1}ψ` between maps of wedges, identified with its Hopf invariant
/// `α: Z[A] → ⊗²_n Z[B]`, subject to `ψ(x) = φ(x) + ∂α({x})`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfTrack {
    pub n: u32,
    pub a: PointedSet,
    pub b: PointedSet,
    pub source: Class2Hom,
    pub target: Class2Hom,
    pub alpha: AbMap,
}

/// `∂: ⊗²_n Z[B] → Λ²Z[B]` on the central layer of `⟨B⟩_nil`.
pub fn boundary_linear(n: u32, b: &PointedSet) -> Result<AbMap> {
    let del = boundary(n, b)?;
    let g = &del.target;
    let t = quadratic::tensor_square_n(n, &free_abelian(b))?;
    let cols: Vec<AbElem> = del.images().iter().map(|x| x.c.clone()).collect();
    let m = if cols.is_empty() { IntMatrix::zeros(g.m(), 0) } else { IntMatrix::from_cols(g.m(), cols) };
    AbMap::new(t, g.central().clone(), m)
}

/// `(π_1k)_{ab}` for a map of free nil-groups.
pub fn ab_of(k: &Class2Hom, a: &PointedSet, b: &PointedSet) -> AbMap {
    let cols: Vec<AbElem> = (0..a.len()).map(|i| k.image_of_gen(i).q.clone()).collect();
    let m = if cols.is_empty() { IntMatrix::zeros(b.len(), 0) } else { IntMatrix::from_cols(b.len(), cols) };
    AbMap::new(free_abelian(a), free_abelian(b), m).expect("free source")
}

impl HopfTrack {
    pub fn new(n: u32, a: &PointedSet, b: &PointedSet, source: Class2Hom, target: Class2Hom, alpha: AbMap) -> Result<Self> {
        let (fa, fb) = (free_nil(a), free_nil(b));
        for f in [&source, &target] {
            if f.source != fa || f.target != fb {
                return Err(Error::Invalid("tracks live between maps of free nil-groups on A and B".into()));
            }
        }
        let t = quadratic::tensor_square_n(n, &free_abelian(b))?;
        if alpha.source != free_abelian(a) || alpha.target != t {
            return Err(Error::Invalid("α must map Z[A] to the level-n tensor square of Z[B]".into()));
        }
        let h = HopfTrack { n, a: a.clone(), b: b.clone(), source, target, alpha };
        if let Some(x) = h.failure()? {
            return Err(Error::Invalid(format!("ψ({}) ≠ φ({}) + ∂α({})", x, x, x)));
        }
        Ok(h)
    }

    fn failure(&self) -> Result<Option<String>> {
        let del = boundary(self.n, &self.b)?;
        let g = &del.target;
        for i in 0..self.a.len() {
            let x = free_nil(&self.a).gen(i);
            let d = del.apply(&del.source.from_central(&self.alpha.apply(&x.q)));
            if g.mul(&self.source.apply(&x), &d) != self.target.apply(&x) {
                return Ok(Some(self.a.elems()[i].clone()));
            }
        }
        Ok(None)
    }

    /// Re-validates the defining condition.
    pub fn is_valid(&self) -> bool {
        matches!(self.failure(), Ok(None))
    }

    /// The zero track on `φ`.
    pub fn identity(n: u32, a: &PointedSet, b: &PointedSet, phi: &Class2Hom) -> Result<Self> {
        let t = quadratic::tensor_square_n(n, &free_abelian(b))?;
        Self::new(n, a, b, phi.clone(), phi.clone(), AbMap::zero(&free_abelian(a), &t))
    }

    /// `K ⊡ H`: `α_K + α_H`.
    pub fn vcomp(&self, k: &HopfTrack) -> Result<HopfTrack> {
        if self.n != k.n || !self.target.equals(&k.source) {
            return Err(Error::Invalid("tracks are not vertically composable".into()));
        }
        Ok(HopfTrack { target: k.target.clone(), alpha: self.alpha.add(&k.alpha), ..self.clone() })
    }

    /// `H^{-1}`: `−α_H`.
    pub fn inverse(&self) -> HopfTrack {
        HopfTrack { source: self.target.clone(), target: self.source.clone(), alpha: self.alpha.neg(), ..self.clone() }
    }

    /// `H(Σ^{n-1}k)` for `k: ⟨C⟩_nil → ⟨A⟩_nil`: `α_H ∘ (k)_ab`.
    pub fn whisker_right(&self, k: &Class2Hom, c: &PointedSet) -> Result<HopfTrack> {
        if k.source != free_nil(c) || k.target != free_nil(&self.a) {
            return Err(Error::Invalid("whiskering map does not land in the source of the track".into()));
        }
        Ok(HopfTrack {
            a: c.clone(),
            source: k.then(&self.source),
            target: k.then(&self.target),
            alpha: ab_of(k, c, &self.a).then(&self.alpha),
            ..self.clone()
        })
    }

    /// `(Σ^{n-1}h)H` for `h: ⟨B⟩_nil → ⟨D⟩_nil`: `⊗²_n(h_ab) ∘ α_H`.
    pub fn whisker_left(&self, h: &Class2Hom, d: &PointedSet) -> Result<HopfTrack> {
        if h.source != free_nil(&self.b) || h.target != free_nil(d) {
            return Err(Error::Invalid("whiskering map does not start at the target of the track".into()));
        }
        let t = quadratic::tensor_square_n_map(self.n, &ab_of(h, &self.b, d))?;
        Ok(HopfTrack {
            b: d.clone(),
            source: self.source.then(h),
            target: self.target.then(h),
            alpha: self.alpha.then(&t),
            ..self.clone()
        })
    }

    /// `ΣH` at level `n + 1`: `σ̄ ∘ α` from level 2, unchanged from level 3 on.
    pub fn suspend(&self) -> Result<HopfTrack> {
        let alpha = if self.n == 2 {
            self.alpha.then(&quadratic::sigma_bar(&free_abelian(&self.b)))
        } else {
            self.alpha.clone()
        };
        Ok(HopfTrack { n: self.n + 1, alpha, ..self.clone() })
    }

    /// Horizontal composite `H' ∘ H` of `H: φ ⇒ ψ` (A → B) and `H': φ' ⇒ ψ'` (B → C):
    /// `α_{H'} ∘ (φ)_ab + ⊗²_n(ψ')_ab ∘ α_H`.
    pub fn hcomp(&self, other: &HopfTrack) -> Result<HopfTrack> {
        let left = self.whisker_left(&other.target, &other.b)?;
        let right = other.whisker_right(&self.source, &self.a)?;
        right.vcomp(&left)
    }
}

/// The unique nil-track `φ ⇒ ψ`, which exists iff `φ = ψ`.
pub fn nil_track_between(n: u32, a: &PointedSet, b: &PointedSet, phi: &Class2Hom, psi: &Class2Hom) -> Result<Option<HopfTrack>> {
    if phi.equals(psi) {
        Ok(Some(HopfTrack::identity(n, a, b, phi)?))
    } else {
        Ok(None)
    }
}

/// All tracks `φ ⇒ ψ`: a particular solution plus, per generator of `A`, the kernel of `∂`.
#[derive(Clone, Debug)]
pub struct TrackTorsor {
    pub particular: HopfTrack,
    /// `ker(∂: ⊗²_n Z[B] → ⟨B⟩_nil)` and its inclusion.
    pub kernel: (FinAbGroup, AbMap),
}

pub fn tracks_between(n: u32, a: &PointedSet, b: &PointedSet, phi: &Class2Hom, psi: &Class2Hom) -> Result<Option<TrackTorsor>> {
    let del = boundary_linear(n, b)?;
    let g = free_nil(b);
    let mut cols = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let x = free_nil(a).gen(i);
        let d = g.mul(&g.inv(&phi.apply(&x)), &psi.apply(&x));
        if !crate::matrix::is_zero_vec(&d.q) {
            return Ok(None);
        }
        match del.preimage(&d.c) {
            Some(v) => cols.push(v),
            None => return Ok(None),
        }
    }
    let t = del.source.clone();
    let m = if cols.is_empty() { IntMatrix::zeros(t.ngens(), 0) } else { IntMatrix::from_cols(t.ngens(), cols) };
    let alpha = AbMap::new(free_abelian(a), t, m)?;
    let particular = HopfTrack::new(n, a, b, phi.clone(), psi.clone(), alpha)?;
    Ok(Some(TrackTorsor { particular, kernel: del.kernel() }))
}

/// Level 1: a track exists, and is then unique, iff the maps of free groups agree.
pub fn level_one_track_exists(f: &crate::cross::GroupMap, g: &crate::cross::GroupMap) -> bool {
    f.equals(g)
}

//! The acceptance suite: eleven criteria, each reported as one PASS/FAIL line.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{is_exact_at, AbMap, FinAbGroup};
use crate::cross::{Base, BaseElem, CrossObject, FiniteGroup, GroupMap, PointedGroupoid, QuadModule, H0};
use crate::error::Result;
use crate::functors::{ad1, adjunction_check, fiber, phi3, phi_morphism, six_term_sequence, ENUMERATION_CAP};
use crate::matrix::{int, IntMatrix};
use crate::models::{circle_comparison, homotopy_groups, k_invariant, suspension_comparison, wedge_model};
use crate::nil2::{self, free_abelian, free_nil, nil_hom_from_words, nilize, wedge_index, Class2Hom, FreeWord, PointedSet};
use crate::quadratic;
use crate::tracks::{boundary_linear, interchange_check, level_one_track_exists, nil_track_between, tracks_between, HopfTrack};

use super::fixtures::{cyclic, cyclic_crossed, dihedral, free_point, trivial_module, universal_module};
use super::oracles::{abelianized_words, boundary_by_commutators, hopf_condition_holds, nil_normal_form};
use super::random::{random_alpha, random_hopf_track, random_square, random_wedge_morphism, random_words, track_target};

/// Wall-clock budget for the whole suite.
pub const SUITE_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0x5eed, jobs: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {:<28} {:>8.3}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn(u64) -> Result<(bool, String)>;

pub const CRITERIA: [(&str, Check); 11] = [
    ("gamma sequence exactness", c1_exactness),
    ("normal form oracle", c2_normal_form),
    ("track calculus", c3_tracks),
    ("interchange law", c4_interchange),
    ("fiber exactness", c5_fibers),
    ("homotopy groups of wedges", c6_wedges),
    ("suspension comparisons", c7_suspension),
    ("k-invariants", c8_k_invariants),
    ("free crossed module forms", c9_ad1),
    ("adjunctions", c10_adjunctions),
    ("serialization round trip", c11_serialization),
];

/// Runtime limits for criteria that carry one.
fn time_limit(id: usize) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(5)),
        6 => Some(Duration::from_secs(2)),
        _ => None,
    }
}

fn run_one(id: usize, seed: u64) -> Outcome {
    let (name, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let r = check(seed.wrapping_add(id as u64));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match r {
        Ok(x) => x,
        Err(e) => (false, format!("error: {}", e)),
    };
    if let Some(limit) = time_limit(id) {
        if elapsed > limit {
            passed = false;
            detail = format!("{}; over the {} s limit", detail, limit.as_secs());
        }
    }
    Outcome { id, name, passed, detail, elapsed }
}

/// Runs every criterion, sharded over `jobs` threads; results come back in criterion order.
pub fn run(config: &Config) -> Vec<Outcome> {
    run_selected(config, &(1..=CRITERIA.len()).collect::<Vec<_>>())
}

pub fn run_selected(config: &Config, ids: &[usize]) -> Vec<Outcome> {
    let start = Instant::now();
    let jobs = config.jobs.max(1);
    let mut out: Vec<Outcome> = if jobs == 1 {
        ids.iter().map(|&i| run_one(i, config.seed)).collect()
    } else {
        let shards: Vec<Vec<usize>> = (0..jobs).map(|j| ids.iter().copied().skip(j).step_by(jobs).collect()).collect();
        std::thread::scope(|s| {
            let handles: Vec<_> = shards
                .iter()
                .map(|shard| s.spawn(move || shard.iter().map(|&i| run_one(i, config.seed)).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("criterion thread")).collect()
        })
    };
    out.sort_by_key(|o| o.id);
    let total = start.elapsed();
    if total > SUITE_BUDGET {
        if let Some(o) = out.iter_mut().find(|o| o.id == 11) {
            o.passed = false;
            o.detail = format!("{}; suite took {:.1} s", o.detail, total.as_secs_f64());
        }
    }
    out
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c1_exactness(_: u64) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for n in [2, 3] {
        for k in 1..=4 {
            let a = PointedSet::numbered(k);
            let za = free_abelian(&a);
            let inc = quadratic::gamma_n_inclusion(n, &za)?;
            let del = boundary_linear(n, &a)?;
            let g = free_nil(&a);
            // ∂ agrees with the commutator formula column by column
            let cols_agree = (0..del.source.ngens()).all(|i| {
                let e = crate::matrix::unit(del.source.ngens(), i);
                g.from_central(&del.apply(&e)) == boundary_by_commutators(&g, &e)
            });
            // ker(ab) is the central layer, since normal forms with q = 0 are central;
            // the letters map onto a basis of Z[A]
            let ab = AbMap::new(
                g.outer(),
                za.clone(),
                IntMatrix::from_cols(k, (0..k).map(|i| g.gen(i).q).collect()),
            )?;
            let ok = inc.is_injective() && is_exact_at(&inc, &del) && del.is_surjective() && ab.is_surjective() && cols_agree;
            if !ok {
                failures.push(format!("n={} k={}", n, k));
            }
        }
    }
    Ok((failures.is_empty(), if failures.is_empty() { "n=2,3 k=1..4".into() } else { failures.join(", ") }))
}

fn c2_normal_form(seed: u64) -> Result<(bool, String)> {
    let mut r = rng(seed);
    let mut bad = 0;
    for _ in 0..2000 {
        let k = r.gen_range(1..=3);
        let g = nil2::free_nil(&PointedSet::numbered(k));
        let w = FreeWord::random(&mut r, k, 8);
        let x = nilize(&w, &g)?;
        if (x.q.clone(), x.c.clone()) != nil_normal_form(&w, k) {
            bad += 1;
        }
    }
    let mut bad_hom = 0;
    for _ in 0..2000 {
        let k = r.gen_range(1..=3);
        let g = nil2::free_nil(&PointedSet::numbered(k));
        let (u, v) = (FreeWord::random(&mut r, k, 8), FreeWord::random(&mut r, k, 8));
        if nilize(&u.concat(&v), &g)? != g.mul(&nilize(&u, &g)?, &nilize(&v, &g)?) {
            bad_hom += 1;
        }
    }
    // the oracle's commutator symbol is [x_i, x_j] with i < j
    let g2 = nil2::free_nil(&PointedSet::numbered(2));
    let c = g2.commutator(&g2.gen(0), &g2.gen(1));
    let conv = c.c[wedge_index(2, 0, 1)] == int(1);
    Ok((bad == 0 && bad_hom == 0 && conv, format!("{} oracle mismatches, {} hom failures in 2000 each", bad, bad_hom)))
}

fn c3_tracks(seed: u64) -> Result<(bool, String)> {
    let mut r = rng(seed);
    let mut fails = [0usize; 7];
    for i in 0..1000 {
        let n = 2 + (i % 2) as u32;
        // (1) vertical composition
        let h = random_hopf_track(&mut r, n, 3)?;
        let beta = random_alpha(&mut r, n, &h.a, &h.b)?;
        let chi = track_target(n, &h.a, &h.b, &h.target, &beta)?;
        let k = HopfTrack::new(n, &h.a, &h.b, h.target.clone(), chi, beta.clone())?;
        let kh = h.vcomp(&k)?;
        if !(kh.alpha.equals(&h.alpha.add(&beta)) && hopf_condition_holds(&kh)) {
            fails[1] += 1;
        }
        // (2) right whiskering
        let c = PointedSet::numbered(r.gen_range(1..=3));
        let words = random_words(&mut r, h.a.len(), c.len(), 4);
        let km = nil_hom_from_words(&c, &free_nil(&h.a), &words)?;
        let hk = h.whisker_right(&km, &c)?;
        let kab = AbMap::new(free_abelian(&c), free_abelian(&h.a), IntMatrix::from_cols(h.a.len(), abelianized_words(&words, h.a.len())))?;
        if !(hk.alpha.equals(&kab.then(&h.alpha)) && hopf_condition_holds(&hk)) {
            fails[2] += 1;
        }
        // (3) left whiskering
        let d = PointedSet::numbered(r.gen_range(1..=3));
        let words = random_words(&mut r, d.len(), h.b.len(), 4);
        let hm = nil_hom_from_words(&h.b, &free_nil(&d), &words)?;
        let hh = h.whisker_left(&hm, &d)?;
        let ab = abelianized_words(&words, d.len());
        let (kb, kd) = (h.b.len(), d.len());
        let cols = (0..kb * kb)
            .map(|idx| (0..kd * kd).map(|t| &ab[idx / kb][t / kd] * &ab[idx % kb][t % kd]).collect())
            .collect();
        let t = AbMap::new(
            quadratic::tensor_square_n(n, &free_abelian(&h.b))?,
            quadratic::tensor_square_n(n, &free_abelian(&d))?,
            IntMatrix::from_cols(kd * kd, cols),
        )?;
        if !(hh.alpha.equals(&h.alpha.then(&t)) && hopf_condition_holds(&hh)) {
            fails[3] += 1;
        }
        // (4) level one: only equal maps are joined, by a track suspending to zero
        let imgs: Vec<BaseElem> = words.iter().map(|w| BaseElem::Word(w.clone())).collect();
        let f = GroupMap::new(Base::Free(h.b.clone()), Base::Free(d.clone()), imgs)?;
        let s = nil_track_between(2, &h.b, &d, &hm, &hm)?;
        if !(level_one_track_exists(&f, &f) && s.map(|s| s.alpha.is_zero()).unwrap_or(false)) {
            fails[4] += 1;
        }
        // (5), (6) suspension
        let h2 = random_hopf_track(&mut r, 2, 3)?;
        let s3 = h2.suspend()?;
        if !(s3.alpha.equals(&h2.alpha.then(&quadratic::sigma_bar(&free_abelian(&h2.b)))) && hopf_condition_holds(&s3)) {
            fails[5] += 1;
        }
        let s4 = s3.suspend()?;
        if !(s4.alpha.equals(&s3.alpha) && s4.n == 4 && hopf_condition_holds(&s4)) {
            fails[6] += 1;
        }
    }
    let mut torsor_bad = Vec::new();
    for n in [2, 3] {
        for kb in 1..=4 {
            let a = PointedSet::numbered(2);
            let b = PointedSet::numbered(kb);
            let h = super::random::random_hopf_track_on(&mut r, n, &a, &b)?;
            let t = tracks_between(n, &a, &b, &h.source, &h.target)?;
            let expected = if n == 2 {
                FinAbGroup::free(kb * (kb + 1) / 2)
            } else {
                FinAbGroup::from_orders(&vec![int(2); kb])
            };
            let ok = t.map_or(false, |t| {
                t.kernel.0.is_isomorphic(&quadratic::gamma_n(n, &free_abelian(&b)).unwrap_or_else(|_| FinAbGroup::trivial()))
                    && t.kernel.0.is_isomorphic(&expected)
                    && hopf_condition_holds(&t.particular)
            });
            if !ok {
                torsor_bad.push(format!("n={} k={}", n, kb));
            }
        }
    }
    let total: usize = fails.iter().sum();
    Ok((
        total == 0 && torsor_bad.is_empty(),
        format!("law failures (1)-(6): {:?}; torsor mismatches: {}", &fails[1..], torsor_bad.len()),
    ))
}

fn c4_interchange(seed: u64) -> Result<(bool, String)> {
    let mut r = rng(seed);
    let mut bad = 0;
    let mut kinds = [0usize; 3];
    for i in 0..500 {
        let (n, crossed) = [(2, false), (3, false), (2, true)][i % 3];
        kinds[i % 3] += 1;
        let (a, b) = random_square(&mut r, n, 2, crossed)?;
        if !interchange_check(&a, &b)? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} failures; {} reduced, {} stable, {} crossed squares", bad, kinds[0], kinds[1], kinds[2])))
}

fn c5_fibers(seed: u64) -> Result<(bool, String)> {
    let mut r = rng(seed);
    let mut bad = 0;
    for i in 0..100 {
        let f = match i % 4 {
            0 => random_wedge_morphism(&mut r, 3, 3)?,
            3 => phi_morphism(&random_wedge_morphism(&mut r, 2, 2)?)?,
            _ => random_wedge_morphism(&mut r, 2, 3)?,
        };
        let fr = fiber(&f)?;
        if !fr.fiber.check_axioms().is_empty() || !six_term_sequence(&fr)?.is_exact() {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} of 100 fibers failed", bad)))
}

fn c6_wedges(_: u64) -> Result<(bool, String)> {
    let mut h1_bad = Vec::new();
    let mut h0_bad = Vec::new();
    for n in 2..=5 {
        for k in 1..=4 {
            let e = PointedSet::numbered(k);
            let g = homotopy_groups(&wedge_model(n, &e)?)?;
            let expected = if n == 2 {
                FinAbGroup::free(k * (k + 1) / 2)
            } else {
                FinAbGroup::from_orders(&vec![int(2); k])
            };
            if !g.pi_n1.abelian().map_or(false, |h| h.is_isomorphic(&expected)) {
                h1_bad.push(format!("n={} k={}", n, k));
            }
            let iso = match &g.pi_n {
                H0::Group(q) => nil2::plausibly_isomorphic(&q.group, &free_nil(&e))? && q.group.is_abelian() == (k < 2),
                _ => false,
            };
            if !iso {
                let free_ab = match &g.pi_n {
                    H0::Group(q) => q.group.is_abelian() && q.group.abelianization().is_isomorphic(&FinAbGroup::free(k)),
                    _ => false,
                };
                h0_bad.push(format!("n={} k={}{}", n, k, if free_ab { "" } else { " (not Z[E] either)" }));
            }
        }
    }
    let detail = if h0_bad.is_empty() {
        format!("h1 mismatches: {}", h1_bad.len())
    } else {
        format!("h1 mismatches: {}; h0 differs from the nil-group at {}", h1_bad.len(), h0_bad.join(", "))
    };
    Ok((h0_bad.is_empty() && h1_bad.is_empty(), detail))
}

fn c7_suspension(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for k in 1..=3 {
        let e = PointedSet::numbered(k);
        let s = suspension_comparison(&e)?;
        if !(s.isomorphism && s.weak_equivalence) {
            bad.push(format!("Ad3 k={}", k));
        }
        let c = circle_comparison(&e)?;
        if !(c.isomorphism && c.weak_equivalence) {
            bad.push(format!("Ad2 k={}", k));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "k=1..3 both comparisons".into() } else { bad.join(", ") }))
}

/// Quadratic modules `⊗²Z[e] →0 M →∂ ⟨e⟩_nil` with abelian `M`; the axioms hold because both groups are abelian.
fn zero_omega_modules() -> Result<Vec<CrossObject>> {
    let e = PointedSet::with(&["e"]);
    let base = free_nil(&e);
    let mut out = Vec::new();
    for (order, image, level) in [(0, 0, 2), (0, 2, 2), (2, 0, 3), (0, 0, 3)] {
        let m = cyclic(order, "m");
        let del = Class2Hom::new(m.clone(), base.clone(), vec![base.pow(&base.gen(0), &int(image))])?;
        let omega = vec![m.identity()];
        out.push(CrossObject::Quadratic(QuadModule::new(level, m, base.clone(), del, omega)?));
    }
    Ok(out)
}

fn c8_k_invariants(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 2..=5 {
        if !k_invariant(&wedge_model(n, &PointedSet::with(&["e"]))?)?.map.is_iso() {
            bad.push(format!("sphere n={}", n));
        }
    }
    for (i, x) in zero_omega_modules()?.iter().enumerate() {
        if !x.check_axioms().is_empty() || !k_invariant(x)?.map.is_zero() {
            bad.push(format!("zero ω #{}", i));
        }
    }
    let sign = k_invariant(&wedge_model(2, &PointedSet::with(&["e"]))?)?.sign;
    Ok((bad.is_empty(), if bad.is_empty() { format!("isomorphisms for n=2..5, sign {:?} at n=2", sign) } else { bad.join(", ") }))
}

fn c9_ad1(_: u64) -> Result<(bool, String)> {
    let mut cases: Vec<(String, PointedGroupoid, usize, FinAbGroup)> = Vec::new();
    for k in 0..=3 {
        cases.push((format!("discrete k={}", k), PointedGroupoid::discrete(PointedSet::numbered(k)), k, FinAbGroup::trivial()));
    }
    let z2 = FiniteGroup::cyclic(2);
    let auts = [
        ("Z/2", z2.clone(), FinAbGroup::cyclic(2)),
        ("Z/3", FiniteGroup::cyclic(3), FinAbGroup::cyclic(3)),
        ("Z/4", FiniteGroup::cyclic(4), FinAbGroup::cyclic(4)),
        ("Z/2xZ/2", z2.product(&z2), FinAbGroup::from_orders(&[int(2), int(2)])),
    ];
    for (name, g, h1) in auts {
        cases.push((format!("one object {}", name), PointedGroupoid::one_object(&g), 0, h1));
    }
    for (name, aut, h1) in [("trivial", FiniteGroup::trivial(), FinAbGroup::trivial()), ("Z/3", FiniteGroup::cyclic(3), FinAbGroup::cyclic(3))] {
        let g = PointedGroupoid::from_components(PointedSet::with(&["x"]), &[(vec![0, 1], aut)])?;
        cases.push((format!("two objects {}", name), g, 0, h1));
    }
    let mut bad = Vec::new();
    for (name, g, h0_rank, h1) in &cases {
        let p = ad1(g);
        let h0_ok = p.h0_presentation().free_rank_if_free() == Some(*h0_rank) && p.h0_closed_rank() == *h0_rank;
        let closed_ok = p.h1_closed().map_or(false, |x| x.is_isomorphic(h1));
        let computed_ok = p.h1_computed().map_or(false, |x| x.is_isomorphic(h1));
        if !(h0_ok && closed_ok && computed_ok) {
            bad.push(name.clone());
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{} groupoids", cases.len()) } else { bad.join(", ") }))
}

/// The fixed instances `(x, y)` for `Ad₂ ⊣ φ₂` and `Ad₃ ⊣ φ₃`.
pub fn adjunction_corpus() -> Result<(Vec<(CrossObject, CrossObject)>, Vec<(CrossObject, CrossObject)>)> {
    let e = PointedSet::with(&["e"]);
    let sources2 = [free_point(&e), cyclic_crossed(2, 4, 2)?, cyclic_crossed(3, 3, 0)?];
    let targets2 = [trivial_module(2), universal_module(&cyclic(2, "z"), 2)?, universal_module(&dihedral(), 2)?];
    let mut two = Vec::new();
    for x in &sources2 {
        for y in &targets2 {
            two.push((CrossObject::Crossed(x.clone()), CrossObject::Quadratic(y.clone())));
        }
    }
    let targets3 = [universal_module(&cyclic(4, "z"), 3)?, universal_module(&dihedral(), 3)?, trivial_module(3)];
    let sources3 = [
        match wedge_model(2, &e)? {
            CrossObject::Quadratic(q) => q,
            _ => unreachable!(),
        },
        phi3(&targets3[0])?,
        trivial_module(2),
    ];
    let mut three = Vec::new();
    for x in &sources3 {
        for y in &targets3 {
            three.push((CrossObject::Quadratic(x.clone()), CrossObject::Quadratic(y.clone())));
        }
    }
    Ok((two, three))
}

fn c10_adjunctions(_: u64) -> Result<(bool, String)> {
    let (two, three) = adjunction_corpus()?;
    let mut bad = Vec::new();
    for (n, list) in [(2, &two), (3, &three)] {
        for (i, (x, y)) in list.iter().enumerate() {
            if !adjunction_check(n, x, y, ENUMERATION_CAP)?.passed() {
                bad.push(format!("Ad{} #{}", n, i));
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{} + {} instances", two.len(), three.len()) } else { bad.join(", ") }))
}

fn c11_serialization(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for (name, text) in crate::text::CORPUS {
        if !crate::text::round_trips(text)? {
            bad.push(*name);
        }
    }
    Ok((bad.is_empty(), format!("{} documents, {} failed", crate::text::CORPUS.len(), bad.len())))
}

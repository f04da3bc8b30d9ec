use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triptych::families::chebyshev_t;
use triptych::rational::{frac, Rational};
use triptych::{
    CombinatorialType, Dessin, DessinShape, GeneratingSystem, Permutation, Poly, RatFunc,
};

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..=max_deg + 1)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| frac(n, d)).collect()))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn random_perm(rng: &mut impl Rng, d: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=d).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

fn random_gensys(rng: &mut impl Rng, d: usize) -> GeneratingSystem {
    loop {
        if let Ok(gs) = GeneratingSystem::new(random_perm(rng, d), random_perm(rng, d)) {
            return gs;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_identities(a in small_poly(15), b in nonzero_poly(15)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a * &b).rem(&b).unwrap().is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(&a + &Poly::zero(), a);
    }

    #[test]
    fn gcd_scales_with_common_factor(a in nonzero_poly(6), b in nonzero_poly(6), g in nonzero_poly(4)) {
        let lhs = (&a * &g).gcd(&(&b * &g)).unwrap();
        let rhs = (&g * &a.gcd(&b).unwrap()).monic();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_rules(a in small_poly(10), b in small_poly(10), c in -5i64..5) {
        let c = Rational::from_integer(BigInt::from(c));
        let lin = (&a.scale(&c) + &b).derivative();
        prop_assert_eq!(lin, &a.derivative().scale(&c) + &b.derivative());
        let prod = (&a * &b).derivative();
        prop_assert_eq!(prod, &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn squarefree_reconstructs(factors in prop::collection::vec((nonzero_poly(3), 1u32..=4), 1..=3)) {
        let p = factors.iter().fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        let sq = p.squarefree().unwrap();
        prop_assert_eq!(sq.expand(), p);
        for (i, (f, m)) in sq.factors.iter().enumerate() {
            prop_assert!(f.is_monic());
            prop_assert!(f.gcd(&f.derivative()).unwrap().is_constant());
            if i > 0 {
                prop_assert!(*m > sq.factors[i - 1].1);
            }
            for (g, _) in &sq.factors[i + 1..] {
                prop_assert!(f.gcd(g).unwrap().is_constant());
            }
        }
    }

    #[test]
    fn ratfunc_outputs_stay_canonical(a in small_poly(5), b in nonzero_poly(5), c in small_poly(5), e in nonzero_poly(5)) {
        let f = RatFunc::new(a, b).unwrap();
        let g = RatFunc::new(c, e).unwrap();
        for h in [&f + &g, &f - &g, &f * &g, f.substitute_reciprocal()] {
            prop_assert!(h.is_canonical());
        }
        if !g.is_zero() {
            let q = (&f / &g).unwrap();
            prop_assert!(q.is_canonical());
            prop_assert_eq!(&q * &g, f.clone());
        }
        prop_assert_eq!(f.substitute_reciprocal().substitute_reciprocal(), f);
    }
}

#[test]
fn composition_is_associative_and_conjugation_preserves_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let d = rng.gen_range(1..=12);
        let (a, b, c) = (random_perm(&mut rng, d), random_perm(&mut rng, d), random_perm(&mut rng, d));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(a.conjugate(&b).unwrap().cycle_type(), a.cycle_type());
        // cycles → rebuild → same permutation, same printed form
        let rebuilt = Permutation::from_cycles(d, &a.cycles()).unwrap();
        assert_eq!(rebuilt, a);
        assert_eq!(rebuilt.to_string(), a.to_string());
    }
}

#[test]
fn single_permutation_transitivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 3..=30 {
        let cycle: Vec<usize> = {
            let mut pts: Vec<usize> = (1..=d).collect();
            pts.shuffle(&mut rng);
            pts
        };
        let p = Permutation::from_cycles(d, &[cycle]).unwrap();
        assert!(triptych::perm::is_transitive(&[p]).unwrap());
        let q = random_perm(&mut rng, d);
        assert_eq!(triptych::perm::is_transitive(std::slice::from_ref(&q)).unwrap(), q.num_cycles() == 1);
    }
}

/// Independent count of the valid region: pairs with 2 ≤ e₀, e₁ ≤ d and
/// d + 1 ≤ e₀ + e₁ ≤ 2d − 1.
fn type_count_oracle(d: usize) -> usize {
    let mut n = 0;
    for e0 in 2..=d {
        for e1 in 2..=d {
            if e0 + e1 > d && e0 + e1 < 2 * d {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn type_region() {
    assert_eq!(type_count_oracle(5), 12);
    for d in 3..=30 {
        let types = CombinatorialType::all_of_degree(d);
        assert_eq!(types.len(), type_count_oracle(d), "d = {d}");
        for e0 in 0..=d + 1 {
            for e1 in 0..=d + 1 {
                let inside = (2..=d).contains(&e0) && (2..=d).contains(&e1) && e0 + e1 > d && e0 + e1 < 2 * d;
                let built = CombinatorialType::from_pair(d, e0, e1);
                assert_eq!(built.is_ok(), inside, "d={d} e0={e0} e1={e1}");
                if let Ok(ct) = built {
                    assert!((2..=d).contains(&ct.e_inf));
                }
            }
        }
    }
}

#[test]
fn canonical_round_trip_and_shape() {
    for d in 3..=30 {
        for ct in CombinatorialType::all_of_degree(d) {
            let gs = GeneratingSystem::canonical_single_cycle(&ct).unwrap();
            assert_eq!(gs.genus(), 0);
            assert_eq!(gs.single_cycle_type(), Some(ct));
            let ds = Dessin::from_gensys(&gs);
            assert_eq!(ds.to_gensys(), gs);
            assert_eq!(ds.genus(), 0);
            assert_eq!(ds.shape(), Some(DessinShape::for_type(&ct)));
            assert!(ds.diameter_vertices() <= 4);
        }
    }
}

/// All-pairs shortest paths by Floyd–Warshall on the vertex set, as an
/// oracle for the BFS diameter.
fn diameter_oracle(ds: &Dessin) -> usize {
    let nb = ds.black().len();
    let n = ds.vertex_count();
    let inf = usize::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (b, rot) in ds.black().iter().enumerate() {
        for e in rot {
            let w = ds.white().iter().position(|r| r.contains(e)).unwrap();
            dist[b][nb + w] = 1;
            dist[nb + w][b] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if dist[i][k] + dist[k][j] < dist[i][j] {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    dist.iter().flatten().copied().max().unwrap() + 1
}

#[test]
fn random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let d = rng.gen_range(1..=10);
        let gs = random_gensys(&mut rng, d);
        let ds = Dessin::from_gensys(&gs);
        assert_eq!(ds.to_gensys(), gs);
        assert_eq!(ds.genus(), gs.genus());
        let degree_sum = |vs: &[Vec<usize>]| vs.iter().map(Vec::len).sum::<usize>();
        assert_eq!(degree_sum(ds.black()), d);
        assert_eq!(degree_sum(ds.white()), d);
        assert_eq!(ds.diameter_vertices(), diameter_oracle(&ds));
    }
}

#[test]
fn equivalence_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let d = rng.gen_range(2..=8);
        let a = random_gensys(&mut rng, d);
        let tau = random_perm(&mut rng, d);
        let b = a.conjugate(&tau).unwrap();
        assert!(a.equivalent(&a).unwrap());
        assert!(a.equivalent(&b).unwrap());
        assert!(b.equivalent(&a).unwrap());
        let c = b.conjugate(&random_perm(&mut rng, d)).unwrap();
        assert!(a.equivalent(&c).unwrap());
        assert!(Dessin::from_gensys(&a).isomorphic(&Dessin::from_gensys(&c)));

        let other = random_gensys(&mut rng, d);
        // brute force over S_d decides the unrelated pair
        let brute = all_perms(d).any(|t| a.conjugate(&t).unwrap() == other);
        assert_eq!(a.equivalent(&other).unwrap(), brute);
        assert_eq!(other.equivalent(&a).unwrap(), brute);
    }
}

fn all_perms(d: usize) -> impl Iterator<Item = Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=d).collect();
    heap_permute(d, &mut cur, &mut out);
    out.into_iter()
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation::from_images(a).unwrap());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// `T_n(x) = (n/2) Σ_k (−1)^k (n−k−1)! / (k! (n−2k)!) (2x)^{n−2k}`.
fn chebyshev_oracle(n: usize) -> Poly {
    let fact = |m: usize| -> BigInt { (1..=m).map(BigInt::from).product() };
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); n + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut term = Rational::new(BigInt::from(n) * fact(n - k - 1), BigInt::from(2) * fact(k) * fact(n - 2 * k));
        term *= Rational::from_integer(BigInt::from(2).pow((n - 2 * k) as u32) * sign);
        coeffs[n - 2 * k] = term;
    }
    Poly::new(coeffs)
}

#[test]
fn chebyshev_recurrence_matches_closed_form() {
    for n in 1..=20 {
        assert_eq!(chebyshev_t(n), chebyshev_oracle(n), "n = {n}");
    }
}

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use polyhedral::convex_function::{evaluate, is_proper, optimal_value_fn, PCFunc};
use polyhedral::linalg::{primitive, rat, Rat};
use polyhedral::multifunction::{domain, image, inverse, range, value, MultiFn};
use polyhedral::oracle::{enumerate_basic_solutions, image_member_oracle, minkowski_member_oracle, sample_grid};
use polyhedral::polyhedron::{
    affine_hull, h_to_v, includes, intersect, is_empty, member, minkowski_sum, remove_redundancy, set_equal, v_to_h,
    HRep,
};
use polyhedral::random::{
    instance_rng, random_hrep, random_multifn, random_nonempty_hrep, random_proper_pcfunc, HRepShape,
};
use polyhedral::relint::{binding_index_set, ri_member};

fn rng(seed: u64) -> ChaCha8Rng {
    instance_rng(seed, 1000, 0)
}

fn scaled_rows(p: &HRep, rng: &mut ChaCha8Rng) -> HRep {
    let mut out = HRep::whole_space(p.dim());
    for (a, b) in p.eq_rows() {
        let s = rat(rng.random_range(1..=4));
        out.push_eq(a.iter().map(|x| x * &s).collect(), b * &s);
    }
    for (c, d) in p.ineq_rows() {
        let s = Rat::new(rng.random_range(1..=5).into(), rng.random_range(1..=3).into());
        out.push_ineq(c.iter().map(|x| x * &s).collect(), d * &s);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_input(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=3);
        let p = random_hrep(&mut r, HRepShape::new(dim, 6));
        let e = enumerate_basic_solutions(&p).unwrap();
        prop_assert!(set_equal(&p, &v_to_h(&e)).unwrap());
    }

    #[test]
    fn conversion_yields_vertices_and_extreme_rays(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=3);
        let p = random_hrep(&mut r, HRepShape::new(dim, 6));
        let (v, e) = (h_to_v(&p), enumerate_basic_solutions(&p).unwrap());
        let sorted = |xs: &[Vec<Rat>]| {
            let mut xs = xs.iter().map(|x| primitive(x)).collect::<Vec<_>>();
            xs.sort();
            xs
        };
        prop_assert_eq!(v.points(), e.points());
        prop_assert_eq!(sorted(v.rays()), sorted(e.rays()));
        prop_assert_eq!(v.lineality().len(), e.lineality().len());
    }

    #[test]
    fn minkowski_membership(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=2);
        let p = random_nonempty_hrep(&mut r, HRepShape::new(dim, 4));
        let q = random_nonempty_hrep(&mut r, HRepShape::new(dim, 4));
        let s = minkowski_sum(&p, &q).unwrap();
        for z in sample_grid(&h_to_v(&s), &mut r) {
            prop_assert_eq!(member(&s, &z).unwrap(), minkowski_member_oracle(&p, &q, &z).unwrap());
        }
    }

    #[test]
    fn affine_hull_contains_set(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=4);
        let p = random_nonempty_hrep(&mut r, HRepShape::new(dim, 8));
        let hull = affine_hull(&p).unwrap();
        prop_assert!(includes(&hull, &p).unwrap());
        for u in h_to_v(&p).points() {
            prop_assert!(hull.eq_rows().all(|(a, b)| &polyhedral::linalg::dot(a, u) == b));
        }
    }

    #[test]
    fn redundancy_removal_keeps_set(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=3);
        let p = random_hrep(&mut r, HRepShape::new(dim, 8));
        let q = remove_redundancy(&p);
        prop_assert!(set_equal(&p, &q).unwrap());
        prop_assert!(q.n_rows() <= p.n_rows().max(1));
    }

    #[test]
    fn domain_and_range_swap_under_inverse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (nx, ny) = (r.random_range(1..=2), r.random_range(1..=2));
        let f = random_multifn(&mut r, nx, ny, 5);
        let g = inverse(&f);
        prop_assert!(set_equal(&domain(&f).unwrap(), &range(&g).unwrap()).unwrap());
        prop_assert!(set_equal(&range(&f).unwrap(), &domain(&g).unwrap()).unwrap());
        let dom = domain(&f).unwrap();
        for x in sample_grid(&h_to_v(&dom), &mut r) {
            prop_assert_eq!(member(&dom, &x).unwrap(), !is_empty(&value(&f, &x).unwrap()));
        }
    }

    #[test]
    fn image_membership(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (nx, ny) = (r.random_range(1..=2), r.random_range(1..=2));
        let f = random_multifn(&mut r, nx, ny, 5);
        let c = random_hrep(&mut r, HRepShape::new(nx, 3));
        let img = image(&f, &c).unwrap();
        for y in sample_grid(&h_to_v(&img), &mut r) {
            prop_assert_eq!(member(&img, &y).unwrap(), image_member_oracle(&f, &c, &y).unwrap());
        }
    }

    #[test]
    fn optimal_value_is_an_epigraph_and_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (nx, ny) = (r.random_range(1..=2), r.random_range(1..=2));
        let phi = random_proper_pcfunc(&mut r, nx + ny);
        let big = random_multifn(&mut r, nx, ny, 4);
        let extra = random_hrep(&mut r, HRepShape::new(nx + ny, 2));
        let small = MultiFn::new(nx, ny, intersect(big.graph(), &extra).unwrap()).unwrap();
        let mu_big = optimal_value_fn(&phi, &big).unwrap();
        let mu_small = optimal_value_fn(&phi, &small).unwrap();
        prop_assert!(PCFunc::new(nx, mu_big.epi().clone()).is_ok());
        for x in sample_grid(&h_to_v(&domain(&big).unwrap()), &mut r) {
            prop_assert!(evaluate(&mu_big, &x).unwrap() <= evaluate(&mu_small, &x).unwrap());
        }
    }

    #[test]
    fn relative_interior_ignores_row_presentation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.random_range(1..=3);
        let p = random_nonempty_hrep(&mut r, HRepShape::new(dim, 6));
        let reduced = remove_redundancy(&p);
        let scaled = scaled_rows(&p, &mut r);
        let mut doubled = p.clone();
        for (c, d) in p.ineq_rows() {
            doubled.push_ineq(c.to_vec(), d.clone());
        }
        let idx = binding_index_set(&doubled).unwrap();
        let n = p.n_ineq();
        for i in 0..n {
            prop_assert_eq!(idx.contains(i), idx.contains(i + n));
        }
        for x in sample_grid(&h_to_v(&p), &mut r) {
            let want = ri_member(&p, &x).unwrap();
            prop_assert_eq!(ri_member(&reduced, &x).unwrap(), want);
            prop_assert_eq!(ri_member(&scaled, &x).unwrap(), want);
            prop_assert_eq!(ri_member(&doubled, &x).unwrap(), want);
        }
    }
}

#[test]
fn improper_objective_is_refused() {
    let f = random_multifn(&mut instance_rng(1, 1, 1), 1, 1, 3);
    let unbounded_below = PCFunc::new(2, HRep::whole_space(3)).unwrap();
    assert!(!is_proper(&unbounded_below));
    assert!(optimal_value_fn(&unbounded_below, &f).is_err());
    assert!(is_proper(&random_proper_pcfunc(&mut instance_rng(1, 1, 2), 2)));
}

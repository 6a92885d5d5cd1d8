mod common;

use common::grid;
use hommel::{
    adjust_hochberg, adjust_hommel, find_jumps, h_at, local_test_rejects, reject_hochberg_at,
    reject_hommel_at, PValueStudy, StepWeights, WeightKind,
};
use proptest::prelude::*;

fn p_value() -> impl Strategy<Value = f64> {
    prop_oneof![
        4 => 0.0..=1.0f64,
        1 => prop::sample::select(vec![0.0, 0.01, 0.02, 0.05, 0.25, 0.5, 1.0]),
    ]
}

fn p_values(max: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(p_value(), 1..=max)
}

fn kind() -> impl Strategy<Value = WeightKind> {
    prop_oneof![Just(WeightKind::Simes), Just(WeightKind::Robust)]
}

proptest! {
    #[test]
    fn study_invariants(raw in p_values(60)) {
        let study = PValueStudy::new(&raw).unwrap();
        let m = study.m();
        prop_assert!(study.sorted().windows(2).all(|w| w[0] <= w[1]));
        let mut seen = vec![false; m];
        for (rank, &pos) in study.perm().iter().enumerate() {
            prop_assert!(!seen[pos]);
            seen[pos] = true;
            prop_assert_eq!(study.sorted()[rank].to_bits(), raw[pos].to_bits());
            // stable: equal neighbours keep input order
            if rank > 0 && study.sorted()[rank - 1] == study.sorted()[rank] {
                prop_assert!(study.perm()[rank - 1] < pos);
            }
        }
    }

    #[test]
    fn sorted_view_ignores_input_order(raw in p_values(40), seed in any::<u64>()) {
        let mut shuffled = raw.clone();
        let len = shuffled.len();
        // cheap deterministic shuffle
        let mut state = seed | 1;
        for i in (1..len).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        let a = PValueStudy::new(&raw).unwrap();
        let b = PValueStudy::new(&shuffled).unwrap();
        prop_assert_eq!(a.sorted(), b.sorted());
        for (i, &p) in shuffled.iter().enumerate() {
            prop_assert_eq!(p, b.raw()[i]);
        }

        // adjusted values follow their p-values through the shuffle
        for kind in [WeightKind::Simes, WeightKind::Robust] {
            let wa = StepWeights::new(kind, len).unwrap();
            let ja = find_jumps(&a, &wa).unwrap();
            let jb = find_jumps(&b, &wa).unwrap();
            prop_assert_eq!(ja.alpha(), jb.alpha());
            let ra = adjust_hommel(&a, &ja, &wa).unwrap();
            let rb = adjust_hommel(&b, &jb, &wa).unwrap();
            for (i, &p) in shuffled.iter().enumerate() {
                let j = raw.iter().position(|&q| q == p).unwrap();
                prop_assert_eq!(rb.adjusted()[i], ra.adjusted()[j]);
            }
        }
    }

    #[test]
    fn local_test_monotone_and_robust_implies_simes(
        raw in p_values(10),
        mask in 1u32..1024,
        a in 0.0..=1.0f64,
        b in 0.0..=1.0f64,
    ) {
        let study = PValueStudy::new(&raw).unwrap();
        let m = study.m();
        let subset: Vec<usize> = (0..m).filter(|&k| mask & (1 << k) != 0).collect();
        prop_assume!(!subset.is_empty());
        let simes = StepWeights::new(WeightKind::Simes, m).unwrap();
        let robust = StepWeights::new(WeightKind::Robust, m).unwrap();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for w in [&simes, &robust] {
            if local_test_rejects(&subset, &study, w, lo).unwrap() {
                prop_assert!(local_test_rejects(&subset, &study, w, hi).unwrap());
            }
        }
        if local_test_rejects(&subset, &study, &robust, lo).unwrap() {
            prop_assert!(local_test_rejects(&subset, &study, &simes, lo).unwrap());
        }
    }

    #[test]
    fn schedule_invariants(raw in p_values(200), kind in kind()) {
        let study = PValueStudy::new(&raw).unwrap();
        let m = study.m();
        let weights = StepWeights::new(kind, m).unwrap();
        let s = find_jumps(&study, &weights).unwrap();
        prop_assert_eq!(s.alpha().len(), m + 1);
        prop_assert_eq!(s.alpha()[m], 0.0);
        prop_assert!(s.alpha().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(s.alpha().iter().chain(s.alpha_star()).all(|a| (0.0..=1.0).contains(a)));
        for i in 0..m {
            let max = s.alpha_star()[i..].iter().cloned().fold(0.0, f64::max);
            prop_assert_eq!(s.alpha()[i], max);
        }
        if kind == WeightKind::Simes {
            // equal up to rounding of s_k * (p / k)
            for (a, star) in s.alpha().iter().zip(s.alpha_star()) {
                prop_assert!((a - star).abs() <= 1e-12 * a, "{} vs {}", a, star);
            }
        }
    }

    #[test]
    fn h_is_right_continuous_step(raw in p_values(100), kind in kind()) {
        let study = PValueStudy::new(&raw).unwrap();
        let m = study.m();
        let weights = StepWeights::new(kind, m).unwrap();
        let s = find_jumps(&study, &weights).unwrap();
        prop_assert_eq!(h_at(&s, 1.0), 0);
        let nonzero = raw.iter().filter(|&&p| p > 0.0).count();
        prop_assert_eq!(h_at(&s, 0.0), nonzero);
        for i in 1..=m {
            let level = s.alpha()[i - 1];
            prop_assert!(h_at(&s, level) < i);
            if level > 0.0 {
                let below = level - level * 1e-9;
                prop_assert!(h_at(&s, below) >= i);
            }
        }
        let hs: Vec<usize> = grid(200).into_iter().map(|a| h_at(&s, a)).collect();
        prop_assert!(hs.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn adjustment_properties(raw in p_values(150)) {
        let study = PValueStudy::new(&raw).unwrap();
        let m = study.m();
        let simes = StepWeights::new(WeightKind::Simes, m).unwrap();
        let robust = StepWeights::new(WeightKind::Robust, m).unwrap();
        let js = find_jumps(&study, &simes).unwrap();
        let jr = find_jumps(&study, &robust).unwrap();
        let adj_s = adjust_hommel(&study, &js, &simes).unwrap();
        let adj_r = adjust_hommel(&study, &jr, &robust).unwrap();
        let hoch = adjust_hochberg(&study);

        for (a, b) in adj_r.adjusted().iter().zip(adj_s.adjusted()) {
            prop_assert!(a >= b);
        }
        for result in [&adj_s, &adj_r, &hoch] {
            prop_assert!(result.adjusted().iter().all(|a| (0.0..=1.0).contains(a)));
            let by_rank: Vec<f64> = study.perm().iter().map(|&i| result.adjusted()[i]).collect();
            prop_assert!(by_rank.windows(2).all(|w| w[0] <= w[1]));
        }

        let mut previous = Vec::new();
        for alpha in grid(100) {
            let r = reject_hommel_at(&study, &js, &simes, alpha).unwrap();
            prop_assert_eq!(&r, &adj_s.rejections_at(alpha).unwrap());
            let rr = reject_hommel_at(&study, &jr, &robust, alpha).unwrap();
            prop_assert_eq!(&rr, &adj_r.rejections_at(alpha).unwrap());
            let h = reject_hochberg_at(&study, alpha).unwrap();
            prop_assert_eq!(&h, &hoch.rejections_at(alpha).unwrap());
            prop_assert!(h.is_subset(&r));
            prop_assert!(rr.is_subset(&r));
            prop_assert!(previous.iter().all(|i| r.contains(*i)));
            previous = r.indices().to_vec();
        }
    }
}

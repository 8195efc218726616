use proptest::prelude::*;
use tcm_core::bounds::ChannelConfig;
use tcm_core::constellation::{mpam, mpsk, standard, Family};
use tcm_core::encoder::{memory_splits, raw_count, EncoderIter, EncoderSpec};
use tcm_core::gf2::{self, BitMatrix};
use tcm_core::labeling::{class_representative, Labeling};
use tcm_core::sim::{simulate, SimOptions};
use tcm_core::spectrum::{distance_spectrum, DistanceSpectrum, TcmEncoder};

fn invertible(m: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(0u64..1 << m, m)
        .prop_map(move |w| BitMatrix::from_row_words(m, &w).unwrap())
        .prop_filter("singular", move |a| gf2::rank(a) == m)
}

fn labeling(m: usize) -> impl Strategy<Value = Labeling> {
    Just((0..1usize << m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Labeling::from_integers(&v).unwrap())
}

/// First valid encoder at or after a random counter, wrapping around.
fn encoder(k: usize, m: usize, max_nu: usize) -> impl Strategy<Value = EncoderSpec> {
    (
        k.max(1)..=max_nu,
        any::<u64>(),
        any::<prop::sample::Index>(),
    )
        .prop_filter_map("no valid encoder", move |(nu, c, split)| {
            let splits = memory_splits(k, nu);
            let split = &splits[split.index(splits.len())];
            let raw = raw_count(m, split).unwrap();
            let start = c % raw;
            EncoderIter::new(m, split, start..raw)
                .unwrap()
                .chain(EncoderIter::new(m, split, 0..start).unwrap())
                .next()
                .map(|(_, s)| s)
        })
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 2)), Just((1, 3)), Just((2, 3))]
}

fn same_spectrum(a: &DistanceSpectrum, b: &DistanceSpectrum) -> bool {
    a.len() == b.len()
        && a.lines()
            .iter()
            .zip(b.lines())
            .all(|(x, y)| (x.d2 - y.d2).abs() < 1e-9 && x.a == y.a && x.w == y.w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(m in 1usize..7, seed in any::<u64>()) {
        let a = {
            let mut s = seed;
            loop {
                let rows: Vec<u64> = (0..m).map(|i| (s.rotate_left(7 * i as u32)) & ((1 << m) - 1)).collect();
                let a = BitMatrix::from_row_words(m, &rows).unwrap();
                if gf2::rank(&a) == m { break a; }
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            }
        };
        let inv = gf2::invert(&a).unwrap();
        let id = BitMatrix::identity(m).unwrap();
        prop_assert_eq!(gf2::multiply(&a, &inv).unwrap(), id.clone());
        prop_assert_eq!(gf2::multiply(&inv, &a).unwrap(), id);
    }

    #[test]
    fn factorization_round_trips(l in (1usize..6).prop_flat_map(labeling), t in (1usize..6).prop_flat_map(invertible)) {
        prop_assume!(t.rows() == l.order());
        let f = gf2::rce_factorize(l.matrix()).unwrap();
        prop_assert!(gf2::is_reduced_column_echelon(&f.echelon));
        prop_assert_eq!(&gf2::multiply(&f.echelon, &f.transform).unwrap(), l.matrix());
        let moved = l.transformed(&t).unwrap();
        prop_assert_eq!(class_representative(&moved), class_representative(&l));
    }

    #[test]
    fn encoding_is_linear(
        spec in shape().prop_flat_map(|(k, m)| encoder(k, m, 4)),
        u in proptest::collection::vec(0usize..4, 1..40),
        v in proptest::collection::vec(0usize..4, 1..40),
    ) {
        let mask = (1 << spec.k()) - 1;
        let n = u.len().min(v.len());
        let u: Vec<usize> = u[..n].iter().map(|x| x & mask).collect();
        let v: Vec<usize> = v[..n].iter().map(|x| x & mask).collect();
        let s: Vec<usize> = u.iter().zip(&v).map(|(a, b)| a ^ b).collect();
        let (eu, ev, es) = (spec.encode(&u), spec.encode(&v), spec.encode(&s));
        for i in 0..n {
            prop_assert_eq!(es[i], eu[i] ^ ev[i]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transform_preserves_symbols_and_spectrum(
        (spec, lab, t) in shape().prop_flat_map(|(k, m)| (encoder(k, m, 2), labeling(m), invertible(m))),
        family in prop_oneof![Just(Family::Pam), Just(Family::Psk)],
        inputs in proptest::collection::vec(0usize..4, 1..200),
    ) {
        let x = standard(family, lab.size()).unwrap();
        let enc = TcmEncoder::new(spec, lab, x).unwrap();
        let moved = enc.transformed(&t).unwrap();
        let inputs: Vec<usize> = inputs.iter().map(|v| v & ((1 << enc.spec().k()) - 1)).collect();
        prop_assert_eq!(enc.symbols(&inputs), moved.symbols(&inputs));
        match (distance_spectrum(&enc, 5), distance_spectrum(&moved, 5)) {
            (Ok(a), Ok(b)) => prop_assert!(same_spectrum(&a, &b)),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn symmetric_labelings_share_spectra(
        (spec, lab) in shape().prop_flat_map(|(k, m)| (encoder(k, m, 2), labeling(m))),
        shift in 1usize..8,
    ) {
        let m = lab.order();
        let pam = TcmEncoder::new(spec.clone(), lab.clone(), mpam(1 << m).unwrap()).unwrap();
        let rev = TcmEncoder::new(spec.clone(), lab.reversed(), mpam(1 << m).unwrap()).unwrap();
        prop_assert!(same_spectrum(&distance_spectrum(&pam, 4).unwrap(), &distance_spectrum(&rev, 4).unwrap()));
        if m >= 2 {
            let psk = TcmEncoder::new(spec.clone(), lab.clone(), mpsk(1 << m).unwrap()).unwrap();
            let rot = TcmEncoder::new(spec, lab.rotated(shift), mpsk(1 << m).unwrap()).unwrap();
            prop_assert!(same_spectrum(&distance_spectrum(&psk, 4).unwrap(), &distance_spectrum(&rot, 4).unwrap()));
        }
    }

    #[test]
    fn scaling_scales_distances_only(
        (spec, lab) in shape().prop_flat_map(|(k, m)| (encoder(k, m, 2), labeling(m))),
        alpha in 0.1f64..10.0,
    ) {
        let x = mpam(lab.size()).unwrap();
        let a = distance_spectrum(&TcmEncoder::new(spec.clone(), lab.clone(), x.clone()).unwrap(), 4).unwrap();
        let b = distance_spectrum(&TcmEncoder::new(spec, lab, x.scaled(alpha)).unwrap(), 4).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (p, q) in a.lines().iter().zip(b.lines()) {
            prop_assert!((p.d2 * alpha * alpha - q.d2).abs() <= 1e-9 * q.d2);
            prop_assert_eq!(p.a, q.a);
            prop_assert_eq!(p.w, q.w);
        }
    }

    #[test]
    fn spectra_are_increasing_and_positive(
        (spec, lab) in shape().prop_flat_map(|(k, m)| (encoder(k, m, 3), labeling(m))),
    ) {
        let ds = distance_spectrum(&TcmEncoder::new(spec, lab.clone(), mpam(lab.size()).unwrap()).unwrap(), 5).unwrap();
        prop_assert!(ds.converged());
        for w in ds.lines().windows(2) {
            prop_assert!(w[0].d2 < w[1].d2);
        }
        for l in ds.lines() {
            prop_assert!(!l.a.is_zero() && !l.w.is_zero());
        }
    }
}

#[test]
fn simulation_is_reproducible_and_batch_independent() {
    let enc = TcmEncoder::new(
        "[5,2]".parse().unwrap(),
        "0 1 2 3".parse().unwrap(),
        mpam(4).unwrap(),
    )
    .unwrap();
    let ch = ChannelConfig::from_db(4.0, 50).unwrap();
    let opts = SimOptions {
        target_frame_errors: 20,
        max_frames: 5000,
        seed: 3,
        batch: 64,
    };
    let a = simulate(&enc, &ch, &opts);
    let b = simulate(&enc, &ch, &opts);
    let c = simulate(&enc, &ch, &SimOptions { batch: 7, ..opts });
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_ne!(a, simulate(&enc, &ch, &SimOptions { seed: 4, ..opts }));
}

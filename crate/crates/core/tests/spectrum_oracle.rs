mod common;

use common::{brute_force_spectrum, dyadic_ratio};
use tcm_core::constellation::{mpam, mpsk};
use tcm_core::encoder::enumerate_all;
use tcm_core::labeling::{mflsa_all, MflsaMode};
use tcm_core::spectrum::{distance_spectrum, TcmEncoder};

const UNIT_4PAM: f64 = 0.8;

/// Compares the best-first engine with the path-pair oracle on every line the
/// oracle completes. Returns the number of compared lines.
fn check(enc: &TcmEncoder, unit: f64, max_len: usize) -> usize {
    let ds = distance_spectrum(enc, 5).unwrap();
    let top = (ds.d2(ds.len() - 1) / unit).round() as u64;
    let oracle = brute_force_spectrum(enc, unit, top, max_len);
    let complete: Vec<_> = ds
        .lines()
        .iter()
        .filter(|l| ((l.d2 / unit).round() as u64) < oracle.open)
        .collect();
    assert_eq!(
        complete.len(),
        oracle.lines.len(),
        "{} {}",
        enc.spec(),
        enc.labeling()
    );
    for (l, o) in complete.iter().zip(&oracle.lines) {
        assert!((l.d2 / unit - o.units as f64).abs() < 1e-9);
        assert_eq!(dyadic_ratio(l.a), o.a, "A at {} for {}", l.d2, enc.spec());
        assert_eq!(dyadic_ratio(l.w), o.w, "W at {} for {}", l.d2, enc.spec());
    }
    complete.len()
}

#[test]
fn matches_path_pairs_for_small_4pam_encoders() {
    let x = mpam(4).unwrap();
    let mut compared = 0;
    for lab in mflsa_all(2, MflsaMode::Pam).unwrap() {
        for nu in 1..=2 {
            for spec in enumerate_all(1, 2, nu).unwrap() {
                let enc = TcmEncoder::new(spec, lab.clone(), x.clone()).unwrap();
                let n = check(&enc, UNIT_4PAM, 12);
                assert!(n >= 1, "no completed line for {}", enc.spec());
                compared += n;
            }
        }
    }
    assert!(compared > 50);
}

#[test]
fn matches_path_pairs_for_two_input_encoders() {
    // 8PAM distances are integer multiples of 4/21.
    let enc = TcmEncoder::new(
        "[1,1,1;1,3,0]".parse().unwrap(),
        "1 2 4 0 6 5 3 7".parse().unwrap(),
        mpam(8).unwrap(),
    )
    .unwrap();
    assert!(check(&enc, 4.0 / 21.0, 7) >= 3);
    // Both inputs tap the same output on the current bit, so some events start
    // with a zero-distance branch.
    let spec: tcm_core::encoder::EncoderSpec = "[2,1,0;3,0,1]".parse().unwrap();
    assert!(spec.is_valid());
    let enc = TcmEncoder::new(spec, "0 1 2 3 4 5 6 7".parse().unwrap(), mpam(8).unwrap()).unwrap();
    assert!(check(&enc, 4.0 / 21.0, 10) >= 2);
    // 4PSK with squared distances 2 and 4.
    let enc = TcmEncoder::new(
        "[5,2]".parse().unwrap(),
        "0 1 3 2".parse().unwrap(),
        mpsk(4).unwrap(),
    )
    .unwrap();
    assert!(check(&enc, 2.0, 10) >= 3);
}

mod common;

use common::exhaustive_ml;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tcm_core::constellation::{mpam, mpsk, Constellation};
use tcm_core::sim::viterbi_decode;
use tcm_core::spectrum::TcmEncoder;

fn noisy(enc: &TcmEncoder, words: &[usize], sigma: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let x = enc.constellation();
    enc.symbols(words)
        .iter()
        .map(|&q| {
            x.point(q)
                .iter()
                .map(|&c| {
                    // Sum of uniforms is enough to create ambiguous observations.
                    let z: f64 = (0..12).map(|_| rng.gen::<f64>()).sum::<f64>() - 6.0;
                    c + sigma * z
                })
                .collect()
        })
        .collect()
}

fn check(g: &str, lab: &str, x: Constellation, trials: usize, sigma: f64) {
    let enc = TcmEncoder::new(g.parse().unwrap(), lab.parse().unwrap(), x).unwrap();
    let k = enc.spec().k();
    let nu = enc.spec().nu();
    let ns = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut wrong = 0;
    for _ in 0..trials {
        let mut words: Vec<usize> = (0..ns).map(|_| rng.gen_range(0..1 << k)).collect();
        words.extend(std::iter::repeat_n(0, nu));
        let rx = noisy(&enc, &words, sigma, &mut rng);
        let ml = exhaustive_ml(&enc, &rx, ns);
        assert_eq!(viterbi_decode(&enc, &rx).unwrap(), ml);
        wrong += (ml != words[..ns]) as usize;
    }
    assert!(wrong > 0, "noise too weak to exercise the decoder");
}

#[test]
fn viterbi_is_ml_on_4pam() {
    check("[5,2]", "0 1 2 3", mpam(4).unwrap(), 100, 0.9);
}

#[test]
fn viterbi_is_ml_on_8psk() {
    check(
        "[1,0,0;0,5,2]",
        "0 1 2 3 4 5 6 7",
        mpsk(8).unwrap(),
        30,
        0.8,
    );
}

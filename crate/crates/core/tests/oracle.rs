use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weightmatch::genmodel::{gen_solid_with, gen_weighted_with};
use weightmatch::oracle::{oracle_wpm, oracle_wtm};
use weightmatch::{Alphabet, Letter, Threshold, WeightedString};

fn permute(w: &WeightedString, perm: &[Letter]) -> WeightedString {
    WeightedString::new(
        w.alphabet().clone(),
        w.positions().map(|p| {
            p.iter()
                .map(|(l, q)| (perm[l as usize], q))
                .collect::<Vec<_>>()
        }),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracles_ignore_letter_names(seed in any::<u64>(), z in 2.0f64..16.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alphabet = Alphabet::dna();
        let mut perm: Vec<Letter> = vec![0, 1, 2, 3];
        perm.shuffle(&mut rng);
        let t = Threshold::new(z).unwrap();

        let x = gen_weighted_with(&mut rng, alphabet.clone(), 5, 0.5);
        let y = gen_solid_with(&mut rng, alphabet.clone(), 300);
        let yp: Vec<Letter> = y.letters().iter().map(|&l| perm[l as usize]).collect();
        prop_assert_eq!(oracle_wpm(&x, y.letters(), t), oracle_wpm(&permute(&x, &perm), &yp, t));

        let yw = gen_weighted_with(&mut rng, alphabet.clone(), 300, 0.5);
        let xs = gen_solid_with(&mut rng, alphabet, 4);
        let xp: Vec<Letter> = xs.letters().iter().map(|&l| perm[l as usize]).collect();
        prop_assert_eq!(oracle_wtm(xs.letters(), &yw, t), oracle_wtm(&xp, &permute(&yw, &perm), t));
    }
}

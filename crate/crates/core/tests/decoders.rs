//! End-to-end checks through the public API only.

use minlist::code::{corrupt, ml_oracle};
use minlist::division::{decode_minimal, decode_minimal_reencoded, DecodeOptions};
use minlist::rational::{decode_rational, decode_rational_reencoded};
use minlist::wire::{build_code, word_from_json, word_to_json, OutcomeJson};
use minlist::{Error, Polynomial, RSCode};
use proptest::prelude::*;

fn message(code: &RSCode, seed: u64) -> Polynomial {
    let q = code.field().order() as u64;
    let coeffs: Vec<i64> = (0..code.k() as u64)
        .map(|i| {
            (seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(i.wrapping_mul(1442695040888963407))
                >> 33)
                % q
        })
        .map(|c| c as i64)
        .collect();
    Polynomial::from_ints(code.field(), &coeffs)
}

fn all_four(code: &RSCode, r: &minlist::Word, opts: &DecodeOptions) -> Vec<Result<minlist::DecodeOutcome, Error>> {
    vec![
        decode_minimal(code, r, opts),
        decode_minimal_reencoded(code, r, opts),
        decode_rational(code, r, opts),
        decode_rational_reencoded(code, r, opts),
    ]
}

#[test]
fn custom_evaluation_points() {
    let code = build_code("p:11", 8, 3, Some(&[10, 3, 5, 7, 1, 0, 9, 2])).unwrap();
    let m = message(&code, 17);
    let c = code.encode(&m).unwrap();
    for weight in 0..=3 {
        let r = corrupt(&c, weight, 99 + weight as u64).unwrap();
        let oracle = ml_oracle(&code, &r).unwrap();
        for out in all_four(&code, &r, &DecodeOptions::default()) {
            match out {
                Ok(out) => assert!(out.same_list(&oracle), "weight {weight}"),
                Err(Error::RadiusCapExceeded { .. }) => assert!(oracle.min_distance > code.johnson_radius()),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn outcome_json_round_trips_messages() {
    let code = build_code("2^4", 15, 5, None).unwrap();
    let c = code.encode(&message(&code, 3)).unwrap();
    let r = corrupt(&c, 5, 8).unwrap();
    let r = word_from_json(&word_to_json(&r)).unwrap();
    let out = decode_rational(&code, &r, &DecodeOptions::default()).unwrap();
    let j = OutcomeJson::new("rational", &out);
    let back: OutcomeJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
    assert_eq!(back.messages(code.field()).unwrap(), out.messages);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree_with_the_oracle(seed in any::<u64>(), weight in 0usize..=4, beyond in any::<bool>()) {
        let code = build_code("2^3", 7, 3, None).unwrap();
        let c = code.encode(&message(&code, seed)).unwrap();
        let r = corrupt(&c, weight, seed).unwrap();
        let oracle = ml_oracle(&code, &r).unwrap();
        let opts = if beyond { DecodeOptions::beyond_johnson() } else { DecodeOptions::default() };
        for out in all_four(&code, &r, &opts) {
            match out {
                Ok(out) => {
                    prop_assert!(out.same_list(&oracle));
                    for m in &out.messages {
                        prop_assert_eq!(r.distance_to_message(m).unwrap(), oracle.min_distance);
                    }
                }
                Err(Error::RadiusCapExceeded { .. }) => {
                    prop_assert!(!beyond && oracle.min_distance > code.johnson_radius());
                }
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }
}

use crate::algebra::VarRegistry;
use crate::constructions::{combined_type_weights, pd12, pd8, CombineVariant};

use super::{radon_hurwitz, rational_family_exists, ChainStep, ExistenceVerdict, RFType};

/// The complete list of weight tuples (u_1, ..., u_k) for which a full
/// OD(32; 1,1,1,1,1, u_1, ..., u_k) exists; a known classification,
/// encoded as a fact table rather than re-derived.
pub(crate) const FULL_OD32_TAILS: [&[u64]; 4] = [&[9, 9, 9], &[9, 18], &[12, 15], &[27]];

/// No OD(n; 1,1,1,1,1, n-5) exists beyond this order; a known
/// non-existence result, encoded as a fact.
pub(crate) const OD_FIVE_ONES_LIMIT: u64 = 40;

/// Decides whether a PD(n; 1,1,1; 1,1,1; n-3) exists.
///
/// Exists exactly for n in {4, 8, 12} (known constructions; for 8 and 12
/// the chain records a live verification of the built triples). Every other
/// n is refuted by one of four rules:
/// - n <= 3: the N component would need weight n-3 <= 0;
/// - 4 does not divide n: an OD(n; 1,1,1) would exceed the Radon-Hurwitz
///   variable bound rho(n) < 3;
/// - n = 16: combining with the order-2 AOD would give an OD(32; 1_(6), 26),
///   i.e. a full OD(32; 1_(5), 1, 26), whose tail (1, 26) is not in the
///   known classification of full OD(32; 1_(5), ...) completions;
/// - n = 20: combining with an AOD(4; 1,1,2; 1,1,2) would give an
///   OD(80; 1_(3), 3_(3), 17_(2), 34), hence a rational family of that type
///   and order 16, which the Hilbert-symbol product S_17 = -1 rules out;
/// - n > 20: the derived OD(2n; 1_(6), 2n-6) yields an OD(2n; 1_(5), 2n-5)
///   by identifying two variables, impossible beyond order 40.
pub fn decide_pd133(n: u64) -> ExistenceVerdict {
    match n {
        4 => ExistenceVerdict::exists(vec![ChainStep::new(
            "known-construction",
            "(PD(4; 1,1,1; 1,1,1; 1))",
            "exists (recorded construction)",
        )]),
        8 | 12 => {
            let mut reg = VarRegistry::new();
            let build = if n == 8 {
                pd8(&mut reg)
            } else {
                pd12(&mut reg)
            };
            let mut chain = vec![ChainStep::new(
                "known-construction",
                format!("(PD({n}; 1,1,1; 1,1,1; {}))", n - 3),
                "exists (recorded construction)",
            )];
            match build {
                Ok(triple) => chain.push(ChainStep::new(
                    "verify_pd",
                    format!("(pd{n} builder output)"),
                    triple.verify().to_string(),
                )),
                Err(e) => chain.push(ChainStep::new(
                    "verify_pd",
                    format!("(pd{n} builder output)"),
                    format!("builder failed: {e}"),
                )),
            }
            ExistenceVerdict::exists(chain)
        }
        0..=3 => ExistenceVerdict::not_exists(vec![ChainStep::new(
            "positive-weights",
            format!("(n = {n})"),
            format!("N would need weight n-3 = {} <= 0", n as i64 - 3),
        )]),
        _ if radon_hurwitz(n) < 3 => ExistenceVerdict::not_exists(vec![ChainStep::new(
            "radon-hurwitz-bound",
            format!("(rho({n}))"),
            format!(
                "rho({n}) = {} < 3, so no OD({n}; 1,1,1) component exists \
                 (reconstruction of the definitional argument)",
                radon_hurwitz(n)
            ),
        )]),
        16 => {
            let mut chain = vec![
                combine_step(16),
                ChainStep::new(
                    "full-od32-classification",
                    "(tail of OD(32; 1,1,1,1,1, 1, 26))",
                    format!(
                        "(1, 26) is not among the known completions {:?}",
                        FULL_OD32_TAILS
                    ),
                ),
            ];
            chain.push(ChainStep::new(
                "contradiction",
                "(n = 16)",
                "derived design cannot exist",
            ));
            ExistenceVerdict::not_exists(chain)
        }
        20 => {
            // Hypothetical PD(20; 1,1,1; 1,1,1; 17) combined with an
            // AOD(4; 1,1,2; 1,1,2) split as v = 1, w = (1, 2). Only the
            // type arithmetic is needed; no matrix is built.
            let weights = combined_type_weights(
                CombineVariant::II,
                (&[1, 1, 1], &[1, 1, 1], &[17]),
                (&[1, 1, 2], 1, &[1, 2]),
            );
            let mut chain = vec![ChainStep::new(
                "pd-aod-combination",
                "(PD(20; 1,1,1; 1,1,1; 17) x AOD(4; 1,1,2; 1,1,2), variant ii)",
                format!("would give OD(80; {})", join(&weights)),
            )];
            let rf = RFType::new(weights).expect("combined weights are positive");
            let verdict = rational_family_exists(&rf, 80);
            chain.extend(verdict.chain().iter().cloned());
            ExistenceVerdict::not_exists(chain)
        }
        _ => ExistenceVerdict::not_exists(vec![
            combine_step(n),
            ChainStep::new(
                "identify-variables",
                format!("(OD({}; 1_(6), {}))", 2 * n, 2 * n - 6),
                format!(
                    "identifying one unit variable with the long one gives an \
                     OD({}; 1_(5), {})",
                    2 * n,
                    2 * n - 5
                ),
            ),
            ChainStep::new(
                "od-five-ones-limit",
                format!("(order {})", 2 * n),
                format!(
                    "no OD(m; 1_(5), m-5) exists for m > {OD_FIVE_ONES_LIMIT}, and {} > {OD_FIVE_ONES_LIMIT}",
                    2 * n
                ),
            ),
        ]),
    }
}

fn combine_step(n: u64) -> ChainStep {
    let weights = combined_type_weights(
        CombineVariant::I,
        (&[1, 1, 1], &[1, 1, 1], &[n - 3]),
        (&[1, 1], 1, &[1]),
    );
    ChainStep::new(
        "pd-aod-combination",
        format!("(PD({n}; 1,1,1; 1,1,1; {}) x AOD(2; 1,1; 1,1))", n - 3),
        format!("would give OD({}; {})", 2 * n, join(&weights)),
    )
}

fn join(ws: &[u64]) -> String {
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::ExistenceStatus;

    #[test]
    fn exists_exactly_on_the_three_known_orders() {
        for n in 1..=40u64 {
            let expected = matches!(n, 4 | 8 | 12);
            let verdict = decide_pd133(n);
            assert_eq!(
                verdict.status() == ExistenceStatus::Exists,
                expected,
                "n = {n}"
            );
        }
    }

    #[test]
    fn n12_chain_records_live_verification() {
        let verdict = decide_pd133(12);
        let verify = &verdict.chain()[1];
        assert_eq!(verify.rule, "verify_pd");
        assert!(verify.value.contains("PASS"), "value: {}", verify.value);
    }

    #[test]
    fn n20_chain_ends_with_the_failing_symbol() {
        let verdict = decide_pd133(20);
        assert_eq!(verdict.status(), ExistenceStatus::NotExists);
        let last = verdict.chain().last().unwrap();
        assert_eq!(last.rule, "S_17");
        assert_eq!(last.inputs, "(1,1,1,3,3,3,17,17,34)");
        assert_eq!(last.value, "-1");
    }

    #[test]
    fn n16_cites_the_classification_table() {
        let verdict = decide_pd133(16);
        assert!(verdict
            .chain()
            .iter()
            .any(|s| s.rule == "full-od32-classification"));
    }

    #[test]
    fn n7_is_definitional() {
        let verdict = decide_pd133(7);
        assert_eq!(verdict.status(), ExistenceStatus::NotExists);
        assert_eq!(verdict.chain()[0].rule, "radon-hurwitz-bound");
    }
}

//! Legendre and Hilbert symbols, rational-family existence tests, the
//! classical variable-count bounds, and the executable non-existence
//! decision for product designs of type (1,1,1; 1,1,1; n-3).

mod pd133;
mod symbols;

pub use pd133::decide_pd133;
pub use symbols::{hilbert, is_prime, legendre, relevant_primes, s_p};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{r} and {p} are not coprime")]
    NotCoprime { r: i64, p: u64 },
    #[error("hilbert symbol arguments must be nonzero")]
    ZeroArgument,
    #[error("invalid rational family type: {0}")]
    InvalidType(String),
}

/// Type of a rational family: an ordered list of positive integers. Pairs
/// in products range over positions i < j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFType {
    entries: Vec<u64>,
}

impl RFType {
    pub fn new(entries: Vec<u64>) -> Result<Self, NumTheoryError> {
        if entries.is_empty() {
            return Err(NumTheoryError::InvalidType("type must be nonempty".into()));
        }
        if entries.contains(&0) {
            return Err(NumTheoryError::InvalidType(
                "type entries must be positive".into(),
            ));
        }
        Ok(RFType { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::fmt::Display for RFType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One applied rule in an existence decision: the rule's name, what it was
/// applied to, and what it computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub rule: String,
    pub inputs: String,
    pub value: String,
}

impl ChainStep {
    pub fn new(
        rule: impl Into<String>,
        inputs: impl Into<String>,
        value: impl Into<String>,
    ) -> Self {
        ChainStep {
            rule: rule.into(),
            inputs: inputs.into(),
            value: value.into(),
        }
    }
}

impl std::fmt::Display for ChainStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{} = {}", self.rule, self.inputs, self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExistenceStatus {
    Exists,
    NotExists,
    Undecided,
}

/// A decision plus the ordered chain of rules that produced it. A negative
/// verdict always carries a nonempty chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceVerdict {
    status: ExistenceStatus,
    chain: Vec<ChainStep>,
}

impl ExistenceVerdict {
    pub fn exists(chain: Vec<ChainStep>) -> Self {
        ExistenceVerdict {
            status: ExistenceStatus::Exists,
            chain,
        }
    }

    pub fn not_exists(chain: Vec<ChainStep>) -> Self {
        assert!(!chain.is_empty(), "a negative verdict needs a rule chain");
        ExistenceVerdict {
            status: ExistenceStatus::NotExists,
            chain,
        }
    }

    pub fn undecided(chain: Vec<ChainStep>) -> Self {
        ExistenceVerdict {
            status: ExistenceStatus::Undecided,
            chain,
        }
    }

    pub fn status(&self) -> ExistenceStatus {
        self.status
    }

    pub fn chain(&self) -> &[ChainStep] {
        &self.chain
    }
}

/// Splits n = 2^a * b with b odd.
pub(crate) fn two_part(n: u64) -> (u32, u64) {
    assert!(n > 0, "n must be positive");
    let a = n.trailing_zeros();
    (a, n >> a)
}

/// Radon-Hurwitz number: the maximum number of variables in an OD of order
/// n = 2^a b (b odd) is 8c + 2^d where a = 4c + d, 0 <= d < 4.
pub fn radon_hurwitz(n: u64) -> u64 {
    let (a, _) = two_part(n);
    let (c, d) = (a / 4, a % 4);
    8 * (c as u64) + (1u64 << d)
}

/// Upper bound on the total number of variables in an AOD of order
/// n = 2^a b (b odd): 2a + 2.
pub fn wolfe_bound(n: u64) -> u64 {
    let (a, _) = two_part(n);
    2 * (a as u64) + 2
}

/// The correction table of the Kawada-Iwahori bound, indexed by
/// (t mod 4, b) for n = 2^(4a+b) d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaTable;

impl DeltaTable {
    pub const VALUES: [[i64; 4]; 4] = [[0, 1, 3, 7], [1, 2, 3, 5], [-1, 3, 4, 5], [-1, 1, 5, 6]];

    pub fn get(t_mod_4: usize, b: usize) -> i64 {
        Self::VALUES[t_mod_4][b]
    }
}

/// Kawada-Iwahori bound on the number of variables on one side of an AOD
/// of order n = 2^(4a+b) d (d odd, 0 <= b < 4) whose other side has t
/// variables: rho_t(n) <= 8a - t + delta(t mod 4, b) + 1.
pub fn rho_t_bound(n: u64, t: u64) -> i64 {
    assert!(t >= 1, "t must be at least 1");
    let (e, _) = two_part(n);
    let (a, b) = (e / 4, e % 4);
    8 * (a as i64) - (t as i64) + DeltaTable::get((t % 4) as usize, b as usize) + 1
}

/// Existence of a rational family of the given type and order.
///
/// The order first reduces to its 2-part (a family of some type and order
/// 2^a b with b odd exists iff one of the same type and order 2^a does).
/// When the 2-part is 16 and the type has nine entries, the nine-variable
/// product criterion decides: the family exists iff
/// S_p(type) = prod_{i<j} (s_i, s_j)_p = +1 for every prime p, which only
/// needs checking at 2 and the odd primes dividing some entry (everywhere
/// else every factor is +1). Outside that scope the verdict is Undecided.
pub fn rational_family_exists(t: &RFType, order: u64) -> ExistenceVerdict {
    let (a, odd) = two_part(order);
    let two_part_order = 1u64 << a;
    let mut chain = vec![ChainStep::new(
        "two-power-reduction",
        format!("(order {order} = 2^{a} * {odd})"),
        format!("equivalent to order {two_part_order}"),
    )];
    if two_part_order != 16 || t.len() != 9 {
        chain.push(ChainStep::new(
            "nine-variable-criterion-scope",
            format!("(2-part {two_part_order}, {} variables)", t.len()),
            "criterion applies only to nine variables at 2-part 16",
        ));
        return ExistenceVerdict::undecided(chain);
    }
    let mut all_pass = true;
    for p in relevant_primes(t) {
        let value = s_p(t, p).expect("relevant primes are prime");
        chain.push(ChainStep::new(
            format!("S_{p}"),
            t.to_string(),
            if value > 0 { "+1" } else { "-1" },
        ));
        if value < 0 {
            all_pass = false;
        }
    }
    if all_pass {
        ExistenceVerdict::exists(chain)
    } else {
        ExistenceVerdict::not_exists(chain)
    }
}

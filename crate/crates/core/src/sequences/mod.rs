//! Exact closed forms and recurrences for the enumerations that have one.

mod figure1;

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{Mode, Preset};

pub use figure1::{figure1_expected, Cell, Figure1, Kind, Remark};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SequenceId {
    /// `c_n = (2n)! / (n! (n+1)!)`, n >= 0.
    Catalan,
    /// `2^(n-1)`, n >= 1.
    Pow2,
    /// `(n-1)!`, n >= 2.
    FactorialShift,
    /// `floor(n/2)! ceil(n/2)!`, n >= 1.
    HalfFactorials,
    /// `C(n-1, floor((n-1)/2))`, n >= 1.
    CentralBinomialShift,
    /// Identity class size under `{123,132,321}` with adjacent positions, n >= 3.
    P5bAdj,
    /// Number of involutions, n >= 0.
    Involutions,
    /// Fibonacci with `F(1) = F(2) = 1`, n >= 1.
    Fib,
    /// `a(n) = a(n-1) + a(n-3)`, `a(0) = a(1) = a(2) = 1`.
    A000930,
    /// `F(n+1) - [n even]`, n >= 1.
    FibIverson,
    /// `a(n) = a(n-1) + a(n-2) + a(n-3)`, `a(0) = a(1) = a(2) = 1`.
    TribA000213,
    /// `T(n+2) - [n even]` with `T(0) = T(1) = 0, T(2) = 1`, n >= 1.
    TribA000073Iverson,
    /// `m!! = 1·3·…·m` for odd m >= 1.
    DoubleFactorialOdd,
}

impl SequenceId {
    pub const ALL: [SequenceId; 13] = [
        SequenceId::Catalan,
        SequenceId::Pow2,
        SequenceId::FactorialShift,
        SequenceId::HalfFactorials,
        SequenceId::CentralBinomialShift,
        SequenceId::P5bAdj,
        SequenceId::Involutions,
        SequenceId::Fib,
        SequenceId::A000930,
        SequenceId::FibIverson,
        SequenceId::TribA000213,
        SequenceId::TribA000073Iverson,
        SequenceId::DoubleFactorialOdd,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SequenceId::Catalan => "CATALAN",
            SequenceId::Pow2 => "POW2",
            SequenceId::FactorialShift => "FACTORIAL_SHIFT",
            SequenceId::HalfFactorials => "HALF_FACTORIALS",
            SequenceId::CentralBinomialShift => "CENTRAL_BINOMIAL_SHIFT",
            SequenceId::P5bAdj => "P5B_ADJ",
            SequenceId::Involutions => "INVOLUTIONS",
            SequenceId::Fib => "FIB",
            SequenceId::A000930 => "A000930",
            SequenceId::FibIverson => "FIB_IVERSON",
            SequenceId::TribA000213 => "TRIB_A000213",
            SequenceId::TribA000073Iverson => "TRIB_A000073_IVERSON",
            SequenceId::DoubleFactorialOdd => "DOUBLE_FACTORIAL_ODD",
        }
    }

    pub fn min_n(&self) -> u32 {
        match self {
            SequenceId::Catalan
            | SequenceId::Involutions
            | SequenceId::A000930
            | SequenceId::TribA000213 => 0,
            SequenceId::FactorialShift => 2,
            SequenceId::P5bAdj => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence '{s}'")))
    }
}

static FACTORIAL_MEMO: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());
static DOUBLE_FACTORIAL_MEMO: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

pub fn factorial(n: u32) -> BigUint {
    let mut memo = FACTORIAL_MEMO.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n as usize {
        let next = memo.last().unwrap() * BigUint::from(memo.len());
        memo.push(next);
    }
    memo[n as usize].clone()
}

/// `m!!` for odd `m >= 1`; memo slot `i` holds `(2i+1)!!`.
pub fn double_factorial_odd(m: u32) -> Result<BigUint> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("{m}!! needs an odd argument")));
    }
    let slot = (m / 2) as usize;
    let mut memo = DOUBLE_FACTORIAL_MEMO.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= slot {
        let next = memo.last().unwrap() * BigUint::from(2 * memo.len() + 1);
        memo.push(next);
    }
    Ok(memo[slot].clone())
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn linear_recurrence(initial: &[u64], coeffs_back: &[usize], n: u32) -> BigUint {
    let mut vals: Vec<BigUint> = initial.iter().map(|&v| BigUint::from(v)).collect();
    while vals.len() <= n as usize {
        let len = vals.len();
        let next = coeffs_back.iter().map(|&back| vals[len - back].clone()).sum();
        vals.push(next);
    }
    vals.swap_remove(n as usize)
}

fn fibonacci(n: u32) -> BigUint {
    linear_recurrence(&[0, 1], &[1, 2], n)
}

/// A000073: `T(0) = T(1) = 0, T(2) = 1`.
fn tribonacci(n: u32) -> BigUint {
    linear_recurrence(&[0, 0, 1], &[1, 2, 3], n)
}

fn iverson_even(n: u32) -> BigUint {
    BigUint::from(u32::from(n.is_multiple_of(2)))
}

fn p5b_adjacent(n: u32) -> BigUint {
    let k = n / 2;
    let big = |v: u32| BigRational::from_integer(v.into());
    let three_halves = BigRational::new(3.into(), 2.into());
    let value = if n % 2 == 1 {
        three_halves * big(k) * big(k + 1) * BigRational::from_integer(factorial(2 * k - 1).into())
    } else {
        let k_minus_third = big(k) - BigRational::new(1.into(), 3.into());
        let correction = double_factorial_odd(2 * k - 3).expect("2k-3 is odd");
        three_halves * big(k) * k_minus_third * BigRational::from_integer(factorial(2 * k - 2).into())
            - BigRational::from_integer(correction.into())
    };
    assert!(value.is_integer(), "P5B_ADJ({n}) came out non-integral: {value}");
    value
        .to_integer()
        .to_biguint()
        .expect("P5B_ADJ is non-negative")
}

/// Exact value of sequence `id` at `n`.
pub fn eval(id: SequenceId, n: u32) -> Result<BigUint> {
    if n < id.min_n() {
        return Err(Error::InvalidArgument(format!(
            "{id} is defined for n >= {}, got {n}",
            id.min_n()
        )));
    }
    let value = match id {
        SequenceId::Catalan => factorial(2 * n) / (factorial(n) * factorial(n + 1)),
        SequenceId::Pow2 => BigUint::one() << (n - 1),
        SequenceId::FactorialShift => factorial(n - 1),
        SequenceId::HalfFactorials => factorial(n / 2) * factorial(n.div_ceil(2)),
        SequenceId::CentralBinomialShift => binomial(n - 1, (n - 1) / 2),
        SequenceId::P5bAdj => p5b_adjacent(n),
        SequenceId::Involutions => {
            let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
            for m in 2..=n {
                let next = &cur + BigUint::from(m - 1) * &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        SequenceId::Fib => fibonacci(n),
        SequenceId::A000930 => linear_recurrence(&[1, 1, 1], &[1, 3], n),
        SequenceId::FibIverson => fibonacci(n + 1) - iverson_even(n),
        SequenceId::TribA000213 => linear_recurrence(&[1, 1, 1], &[1, 2, 3], n),
        SequenceId::TribA000073Iverson => tribonacci(n + 2) - iverson_even(n),
        SequenceId::DoubleFactorialOdd => double_factorial_odd(n)?,
    };
    Ok(value)
}

pub fn eval_u64(id: SequenceId, n: u32) -> Result<u64> {
    eval(id, n)?
        .to_u64()
        .ok_or_else(|| Error::TooLarge(format!("{id}({n}) does not fit in 64 bits")))
}

/// The closed form proven for a Figure 1 cell, if there is one.
pub fn formula_for(preset: Preset, mode: Mode, kind: Kind) -> Option<SequenceId> {
    use Preset::*;
    let id = match (kind, mode, preset) {
        (Kind::Classes, Mode::General, P1 | P2) => SequenceId::Catalan,
        (Kind::Classes, Mode::General, P3) => SequenceId::Pow2,
        (Kind::Classes, Mode::AdjPositions, P3) => SequenceId::Involutions,
        (Kind::Identity, Mode::General, P1 | P2) => SequenceId::FactorialShift,
        (Kind::Identity, Mode::AdjPositions, P1 | P2) => SequenceId::HalfFactorials,
        (Kind::Identity, Mode::AdjPositions, P4) => SequenceId::CentralBinomialShift,
        (Kind::Identity, Mode::AdjPositions, P5 | P6) => SequenceId::P5bAdj,
        (Kind::Identity, Mode::AdjBoth, P1 | P2) => SequenceId::Fib,
        (Kind::Identity, Mode::AdjBoth, P4) => SequenceId::A000930,
        (Kind::Identity, Mode::AdjBoth, P3) => SequenceId::FibIverson,
        (Kind::Identity, Mode::AdjBoth, P5 | P6) => SequenceId::TribA000213,
        (Kind::Identity, Mode::AdjBoth, P7) => SequenceId::TribA000073Iverson,
        _ => return None,
    };
    Some(id)
}

/// Outcome of [`gf_convolution_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionCheck {
    pub max_n: u32,
    /// First size at which the convolution fails, if any.
    pub counterexample: Option<u32>,
}

impl ConvolutionCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Confirms that the central-binomial identity-class counts decompose as a
/// leading odd block (counted by Catalan numbers) followed by a smaller
/// reachable permutation, for every size up to `max_n`:
///
/// * size `2m+2`: `A = Σ_{i=0..m} c_i · A_{2(m-i)+1}`
/// * size `2m+1`: `A = c_m + Σ_{i=0..m-1} c_i · A_{2(m-1-i)+2}`
pub fn gf_convolution_check(max_n: u32) -> Result<ConvolutionCheck> {
    if max_n < 4 {
        return Err(Error::InvalidArgument(format!("max_n must be at least 4, got {max_n}")));
    }
    let a = |n: u32| eval(SequenceId::CentralBinomialShift, n).expect("n >= 1");
    Ok(ConvolutionCheck { max_n, counterexample: convolution_counterexample(max_n, a) })
}

fn convolution_counterexample(max_n: u32, a: impl Fn(u32) -> BigUint) -> Option<u32> {
    let c = |i: u32| eval(SequenceId::Catalan, i).expect("n >= 0");
    (1..=max_n).find(|&size| {
        let m = (size - 1) / 2;
        let predicted: BigUint = if size % 2 == 1 {
            c(m) + (0..m).map(|i| c(i) * a(2 * (m - 1 - i) + 2)).sum::<BigUint>()
        } else {
            let m = (size - 2) / 2;
            (0..=m).map(|i| c(i) * a(2 * (m - i) + 1)).sum()
        };
        predicted != a(size)
    })
}

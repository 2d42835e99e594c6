//! Odd-prime arithmetic: primality, the Legendre symbol and quadratic
//! residue tables.
//!
//! A [`LegendreContext`] classifies every residue class modulo `p` once, by
//! squaring `1..p`, and answers symbol queries by table lookup.
//! [`euler_criterion`] is kept as a second, independent route to the same
//! symbol.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest prime accepted by [`LegendreContext::new`].
pub const MAX_PRIME: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueClass {
    Zero,
    Residue,
    NonResidue,
}

impl ResidueClass {
    /// The Legendre symbol value of this class.
    pub fn symbol(self) -> i8 {
        match self {
            ResidueClass::Zero => 0,
            ResidueClass::Residue => 1,
            ResidueClass::NonResidue => -1,
        }
    }
}

/// Trial division. Returns `true` iff `n` is prime and at least 3.
pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An odd prime together with the residue class of every element of Z/pZ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreContext {
    p: u64,
    classes: Vec<ResidueClass>,
}

impl LegendreContext {
    pub fn new(p: u64) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge { p, max: MAX_PRIME });
        }
        let mut classes = vec![ResidueClass::NonResidue; p as usize];
        classes[0] = ResidueClass::Zero;
        for x in 1..p {
            classes[(x * x % p) as usize] = ResidueClass::Residue;
        }
        Ok(Self { p, classes })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces `a` into `0..p`, handling negative inputs.
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn class_of(&self, a: i64) -> ResidueClass {
        self.classes[self.reduce(a) as usize]
    }

    /// Class of a non-negative value, skipping the signed reduction.
    pub fn class_of_unsigned(&self, a: u64) -> ResidueClass {
        self.classes[(a % self.p) as usize]
    }

    pub fn symbol(&self, a: i64) -> i8 {
        self.class_of(a).symbol()
    }

    /// The quadratic residues in `1..p`, ascending.
    pub fn quadratic_residues(&self) -> BTreeSet<u64> {
        self.members(ResidueClass::Residue)
    }

    /// The quadratic nonresidues in `1..p`, ascending.
    pub fn quadratic_nonresidues(&self) -> BTreeSet<u64> {
        self.members(ResidueClass::NonResidue)
    }

    fn members(&self, class: ResidueClass) -> BTreeSet<u64> {
        (1..self.p).filter(|&r| self.classes[r as usize] == class).collect()
    }
}

/// Legendre symbol `(a/p)` in `{-1, 0, 1}`, by table lookup.
pub fn legendre_symbol(a: i64, ctx: &LegendreContext) -> i8 {
    ctx.symbol(a)
}

/// Set of quadratic residues of `ctx.p()` in `1..p`.
pub fn quadratic_residues(ctx: &LegendreContext) -> BTreeSet<u64> {
    ctx.quadratic_residues()
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol by Euler's criterion, `a^((p-1)/2) mod p`.
///
/// `p` must be an odd prime below 2^32.
pub fn euler_criterion(a: i64, p: u64) -> i8 {
    let r = a.rem_euclid(p as i64) as u64;
    match mod_pow(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        x if x == p - 1 => -1,
        x => unreachable!("{x} is not a valid Euler criterion value mod {p}"),
    }
}

/// `(2/p)` from the residue of `p` modulo 8.
pub fn two_symbol_rule(p: u64) -> i8 {
    match p % 8 {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => panic!("two_symbol_rule needs an odd prime, got {p}"),
    }
}

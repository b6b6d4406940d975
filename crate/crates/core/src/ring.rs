use crate::error::Error;

/// The coefficient ring of a computation: exact integers or integers modulo a prime.
///
/// Integer arithmetic is checked; an overflow of the 128-bit representation
/// aborts with a diagnostic instead of wrapping silently. Residues mod `p`
/// are kept canonical in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Ring {
    Int,
    Mod(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    /// The integers mod `p`, rejecting composite moduli.
    pub fn mod_p(p: u32) -> Result<Ring, Error> {
        if is_prime(p) {
            Ok(Ring::Mod(p))
        } else {
            Err(Error::NotAPrime(p))
        }
    }

    /// Canonical representative of `v` in this ring.
    pub fn normalize(&self, v: i128) -> i128 {
        match self {
            Ring::Int => v,
            Ring::Mod(p) => v.rem_euclid(*p as i128),
        }
    }

    pub fn add(&self, a: i128, b: i128) -> i128 {
        self.normalize(a.checked_add(b).expect("coefficient overflow in exact arithmetic"))
    }

    pub fn mul(&self, a: i128, b: i128) -> i128 {
        self.normalize(a.checked_mul(b).expect("coefficient overflow in exact arithmetic"))
    }

    pub fn neg(&self, a: i128) -> i128 {
        self.normalize(a.checked_neg().expect("coefficient overflow in exact arithmetic"))
    }

    pub fn one(&self) -> i128 {
        match self {
            Ring::Mod(1) => 0, // not reachable for prime p, kept total
            _ => 1,
        }
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ring::Int => write!(f, "Z"),
            Ring::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

/// Parse a ring spec of the form `Z`, `Z/2`, `Z/p`.
pub fn parse_ring(s: &str) -> Result<Ring, Error> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("z") {
        return Ok(Ring::Int);
    }
    if let Some(rest) = t.strip_prefix("Z/").or_else(|| t.strip_prefix("z/")) {
        let p: u32 = rest.parse().map_err(|_| Error::Parse {
            pos: 2,
            expected: "a prime modulus".into(),
            found: rest.into(),
        })?;
        return Ring::mod_p(p);
    }
    Err(Error::Parse { pos: 0, expected: "`Z` or `Z/p`".into(), found: t.into() })
}

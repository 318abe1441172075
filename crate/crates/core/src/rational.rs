//! Exact rational helpers shared across the crate.
//!
//! Everything is an `i64`-backed reduced fraction. Cone orders are at most a
//! few dozen, so denominators stay tiny; overflow is not a practical concern
//! but all construction goes through `num_rational`'s reducing constructor.

use num_rational::Rational64;
use num_traits::Zero;

/// Reduced rational number with `i64` numerator and denominator.
pub type Rat = Rational64;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Largest integer `<= q`.
pub fn floor(q: Rat) -> i64 {
    q.floor().to_integer()
}

/// `q` rendered as `"p/q"` in lowest terms with positive denominator,
/// including integers (`3` -> `"3/1"`). This is the wire format for every
/// rational the tools emit.
pub fn fmt(q: Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse the `"p/q"` wire form (or a bare integer string).
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<i64>().ok().map(int),
        Some((p, q)) => {
            let p = p.trim().parse::<i64>().ok()?;
            let q = q.trim().parse::<i64>().ok()?;
            if q == 0 {
                None
            } else {
                Some(rat(p, q))
            }
        }
    }
}

/// True when `a - b` is an even integer: the mod-2 congruence on rationals.
pub fn congruent_mod2(a: Rat, b: Rat) -> bool {
    let d = a - b;
    d.is_integer() && d.to_integer() % 2 == 0
}

/// True when `q` is an integer of the same parity as `m`.
pub fn is_integer_with_parity(q: Rat, m: i64) -> bool {
    q.is_integer() && (q.to_integer() - m) % 2 == 0
}

/// Sum of a rational iterator.
pub fn sum<I: IntoIterator<Item = Rat>>(it: I) -> Rat {
    it.into_iter().fold(Rat::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_lowest_terms_with_positive_denominator() {
        assert_eq!(fmt(rat(2, 4)), "1/2");
        assert_eq!(fmt(rat(1, -2)), "-1/2");
        assert_eq!(fmt(int(-3)), "-3/1");
        assert_eq!(fmt(rat(0, 7)), "0/1");
    }

    #[test]
    fn parses_wire_form_and_bare_integers() {
        assert_eq!(parse("5/10"), Some(rat(1, 2)));
        assert_eq!(parse(" -41/42 "), Some(rat(-41, 42)));
        assert_eq!(parse("7"), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn mod_two_congruence_on_rationals() {
        assert!(is_integer_with_parity(int(4), 0));
        assert!(is_integer_with_parity(int(-3), 1));
        assert!(!is_integer_with_parity(int(3), 0));
        assert!(!is_integer_with_parity(rat(1, 2), 0));
        assert!(congruent_mod2(rat(7, 1), int(1)));
        assert!(!congruent_mod2(rat(1, 2), int(0)));
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(floor(rat(-1, 2)), -1);
        assert_eq!(floor(rat(1, 2)), 0);
        assert_eq!(floor(int(3)), 3);
    }
}

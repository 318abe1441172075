//! Exact integer polynomials in one variable `t`, with optional named
//! symbolic summands for Betti data the topology alone does not determine.
//!
//! A value represents `Σ coeffs[d]·t^d + Σ coeff·t^shift·name` where each
//! `name` stands for an unevaluated Poincaré polynomial (for example of a
//! covering space whose Betti numbers are inputs, not outputs).

use std::fmt;

/// A named, unevaluated polynomial summand multiplied by `coeff·t^shift`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymbolicTerm {
    pub shift: usize,
    pub name: String,
    pub coeff: i64,
}

/// Polynomial with exact integer coefficients plus symbolic summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePoly {
    coeffs: Vec<i64>,
    symbolic: Vec<SymbolicTerm>,
}

impl PoincarePoly {
    pub fn zero() -> Self {
        PoincarePoly {
            coeffs: Vec::new(),
            symbolic: Vec::new(),
        }
    }

    pub fn constant(c: i64) -> Self {
        PoincarePoly {
            coeffs: vec![c],
            symbolic: Vec::new(),
        }
        .normalized()
    }

    /// `c·t^degree`.
    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        PoincarePoly {
            coeffs,
            symbolic: Vec::new(),
        }
        .normalized()
    }

    /// Coefficients in ascending degree; index = power of `t`.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        PoincarePoly {
            coeffs,
            symbolic: Vec::new(),
        }
        .normalized()
    }

    /// `1 + t² + t⁴ + ⋯ + t^{2r}` (the even geometric sum; Poincaré
    /// polynomial of the `r`-th symmetric power of the sphere).
    pub fn even_geometric(r: usize) -> Self {
        let mut coeffs = vec![0; 2 * r + 1];
        for d in (0..=2 * r).step_by(2) {
            coeffs[d] = 1;
        }
        PoincarePoly {
            coeffs,
            symbolic: Vec::new(),
        }
    }

    /// The bare symbolic summand `name`.
    pub fn symbol(name: &str) -> Self {
        PoincarePoly {
            coeffs: Vec::new(),
            symbolic: vec![SymbolicTerm {
                shift: 0,
                name: name.to_string(),
                coeff: 1,
            }],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn symbolic(&self) -> &[SymbolicTerm] {
        &self.symbolic
    }

    /// True when no symbolic summands remain.
    pub fn is_numeric(&self) -> bool {
        self.symbolic.is_empty()
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: usize) -> Self {
        let mut coeffs = vec![0; self.coeffs.len() + k];
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs[d + k] = c;
        }
        let symbolic = self
            .symbolic
            .iter()
            .map(|s| SymbolicTerm {
                shift: s.shift + k,
                name: s.name.clone(),
                coeff: s.coeff,
            })
            .collect();
        PoincarePoly { coeffs, symbolic }.normalized()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, &c) in other.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        let mut symbolic = self.symbolic.clone();
        symbolic.extend(other.symbolic.iter().cloned());
        PoincarePoly { coeffs, symbolic }.normalized()
    }

    /// Sum of numeric coefficients (the total Betti number when the
    /// polynomial is numeric); `None` if symbolic summands remain.
    pub fn value_at_one(&self) -> Option<i64> {
        if self.is_numeric() {
            Some(self.coeffs.iter().sum())
        } else {
            None
        }
    }

    /// Trim trailing zeros; merge symbolic terms by (shift, name), dropping
    /// zero coefficients; keep symbolic terms sorted.
    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self.symbolic.sort_by(|a, b| {
            (a.shift, &a.name).cmp(&(b.shift, &b.name))
        });
        let mut merged: Vec<SymbolicTerm> = Vec::new();
        for term in self.symbolic.drain(..) {
            match merged.last_mut() {
                Some(last) if last.shift == term.shift && last.name == term.name => {
                    last.coeff += term.coeff;
                }
                _ => merged.push(term),
            }
        }
        merged.retain(|t| t.coeff != 0);
        self.symbolic = merged;
        self
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let part = match (d, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}*t^{d}"),
            };
            parts.push(part);
        }
        for s in &self.symbolic {
            let mut factors = Vec::new();
            if s.coeff != 1 {
                factors.push(format!("{}", s.coeff));
            }
            match s.shift {
                0 => {}
                1 => factors.push("t".to_string()),
                d => factors.push(format!("t^{d}")),
            }
            factors.push(s.name.clone());
            parts.push(factors.join("*"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

//! Tropical arithmetic circuits and their synthesis.
//!
//! Every Schur circuit is a ⊙-product of taps on one shared table of
//! tropical elementary symmetric polynomials,
//! `E[j][k] = E[j-1][k] ⊕ (x_j ⊙ E[j-1][k-1])`, so a circuit for `s_λ` in `n`
//! variables needs at most `n(n-1)` table gates plus `λ₁ - 1` products.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bridge::{beta_max, w_from_skew};
use crate::combinatorics::{Partition, Permutation, SkewShape};
use crate::error::{Error, Result};
use crate::newton::RationalPoint;
use crate::sympoly::{ExactPolynomial, Exponent};
use crate::tropical::{
    merge_max, prune_redundant, trop_equal, tropicalize, Mode, TropicalPolynomial,
};

/// Default cap on the number of terms held at any gate during expansion.
pub const DEFAULT_TERM_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Variable `x_{i+1}` (0-based index).
    Input(usize),
    Const(BigRational),
    Oplus(usize, usize),
    Odot(usize, usize),
}

impl Gate {
    fn args(&self) -> Option<(usize, usize)> {
        match *self {
            Gate::Oplus(a, b) | Gate::Odot(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// A topologically ordered max-plus circuit with one output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CircuitJson", try_from = "CircuitJson")]
pub struct Circuit {
    nvars: usize,
    gates: Vec<Gate>,
    output: usize,
}

/// Gate counts over the part of a circuit reachable from its output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateStats {
    pub n_consts: usize,
    pub n_inputs: usize,
    pub n_odot: usize,
    pub n_oplus: usize,
    /// `n_oplus + n_odot`
    pub total: usize,
}

impl Circuit {
    /// Validates index bounds and topological order; never repairs.
    pub fn new(nvars: usize, gates: Vec<Gate>, output: usize) -> Result<Self> {
        if output >= gates.len() {
            return Err(Error::InvalidCircuit(format!(
                "output {output} out of range for {} gates",
                gates.len()
            )));
        }
        for (i, g) in gates.iter().enumerate() {
            match *g {
                Gate::Input(v) if v >= nvars => {
                    return Err(Error::InvalidCircuit(format!(
                        "gate {i} reads variable {v} of {nvars}"
                    )))
                }
                Gate::Oplus(a, b) | Gate::Odot(a, b) if a >= i || b >= i => {
                    return Err(Error::InvalidCircuit(format!(
                        "gate {i} has argument not strictly before it"
                    )))
                }
                _ => {}
            }
        }
        Ok(Circuit {
            nvars,
            gates,
            output,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.gates.len()];
        seen[self.output] = true;
        for i in (0..self.gates.len()).rev() {
            if seen[i] {
                if let Some((a, b)) = self.gates[i].args() {
                    seen[a] = true;
                    seen[b] = true;
                }
            }
        }
        seen
    }

    pub fn stats(&self) -> GateStats {
        let mut s = GateStats::default();
        for (g, live) in self.gates.iter().zip(self.reachable()) {
            if !live {
                continue;
            }
            match g {
                Gate::Input(_) => s.n_inputs += 1,
                Gate::Const(_) => s.n_consts += 1,
                Gate::Oplus(..) => s.n_oplus += 1,
                Gate::Odot(..) => s.n_odot += 1,
            }
        }
        s.total = s.n_oplus + s.n_odot;
        s
    }

    /// One forward pass in exact arithmetic.
    pub fn eval(&self, x: &RationalPoint) -> Result<BigRational> {
        if x.dim() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: x.dim(),
            });
        }
        let live = self.reachable();
        let mut vals: Vec<BigRational> = Vec::with_capacity(self.gates.len());
        for (g, &on) in self.gates.iter().zip(&live) {
            let v = if !on {
                BigRational::zero()
            } else {
                match g {
                    Gate::Input(i) => x.coords()[*i].clone(),
                    Gate::Const(c) => c.clone(),
                    Gate::Oplus(a, b) => vals[*a].clone().max(vals[*b].clone()),
                    Gate::Odot(a, b) => &vals[*a] + &vals[*b],
                }
            };
            vals.push(v);
        }
        Ok(vals.swap_remove(self.output))
    }

    /// The tropical polynomial computed by the circuit, built bottom-up: ⊕
    /// unions term sets with idempotent merge, ⊙ adds exponents pairwise and
    /// coefficients along with them. In functional mode every gate's terms
    /// are additionally pruned to the non-redundant ones.
    pub fn expand(&self, mode: Mode, term_cap: usize) -> Result<TropicalPolynomial> {
        let live = self.reachable();
        let mut sets: Vec<Option<Vec<(Exponent, BigRational)>>> = vec![None; self.gates.len()];
        for (i, g) in self.gates.iter().enumerate() {
            if !live[i] {
                continue;
            }
            let merged = match g {
                Gate::Input(v) => {
                    let mut e = vec![0; self.nvars];
                    e[*v] = 1;
                    merge_max([(e, BigRational::zero())])
                }
                Gate::Const(c) => merge_max([(vec![0; self.nvars], c.clone())]),
                Gate::Oplus(a, b) => {
                    let (sa, sb) = (sets[*a].as_ref().unwrap(), sets[*b].as_ref().unwrap());
                    merge_max(sa.iter().chain(sb).cloned())
                }
                Gate::Odot(a, b) => {
                    let (sa, sb) = (sets[*a].as_ref().unwrap(), sets[*b].as_ref().unwrap());
                    if sa.len().saturating_mul(sb.len()) > term_cap.saturating_mul(64) {
                        return Err(cap_error(i, sa.len() * sb.len(), term_cap));
                    }
                    merge_max(sa.iter().flat_map(|(ea, ca)| {
                        sb.iter().map(move |(eb, cb)| {
                            let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                            (e, ca + cb)
                        })
                    }))
                }
            };
            if merged.len() > term_cap {
                return Err(cap_error(i, merged.len(), term_cap));
            }
            let terms: Vec<_> = merged.into_iter().collect();
            sets[i] = Some(match mode {
                Mode::Axiomatic => terms,
                Mode::Functional => prune_redundant(terms),
            });
        }
        let out = sets[self.output].take().expect("output is live");
        TropicalPolynomial::new(self.nvars, out)
    }
}

fn cap_error(gate: usize, terms: usize, cap: usize) -> Error {
    Error::ResourceCap(format!("gate {gate} holds {terms} terms, cap is {cap}"))
}

/// Incremental circuit construction with structural sharing: an identical
/// gate (up to argument order) is created once.
#[derive(Clone, Debug)]
pub struct CircuitBuilder {
    nvars: usize,
    gates: Vec<Gate>,
    memo: HashMap<Gate, usize>,
}

impl CircuitBuilder {
    pub fn new(nvars: usize) -> Self {
        CircuitBuilder {
            nvars,
            gates: Vec::new(),
            memo: HashMap::new(),
        }
    }

    fn push(&mut self, g: Gate) -> usize {
        let g = match g {
            Gate::Oplus(a, b) if a > b => Gate::Oplus(b, a),
            Gate::Odot(a, b) if a > b => Gate::Odot(b, a),
            g => g,
        };
        if let Some(&i) = self.memo.get(&g) {
            return i;
        }
        let i = self.gates.len();
        self.gates.push(g.clone());
        self.memo.insert(g, i);
        i
    }

    pub fn input(&mut self, var: usize) -> usize {
        assert!(var < self.nvars, "variable index out of range");
        self.push(Gate::Input(var))
    }

    pub fn constant(&mut self, c: BigRational) -> usize {
        self.push(Gate::Const(c))
    }

    pub fn oplus(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Oplus(a, b))
    }

    pub fn odot(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Odot(a, b))
    }

    /// Number of ⊕/⊙ gates created so far.
    pub fn op_gates(&self) -> usize {
        self.gates.iter().filter(|g| g.args().is_some()).count()
    }

    /// Keeps only gates reachable from `output`, renumbered in order.
    pub fn finish(&self, output: usize) -> Circuit {
        let full = Circuit {
            nvars: self.nvars,
            gates: self.gates.clone(),
            output,
        };
        let live = full.reachable();
        let mut index = vec![usize::MAX; self.gates.len()];
        let mut gates = Vec::new();
        for (i, g) in self.gates.iter().enumerate() {
            if !live[i] {
                continue;
            }
            index[i] = gates.len();
            gates.push(match *g {
                Gate::Oplus(a, b) => Gate::Oplus(index[a], index[b]),
                Gate::Odot(a, b) => Gate::Odot(index[a], index[b]),
                ref other => other.clone(),
            });
        }
        Circuit {
            nvars: self.nvars,
            gates,
            output: index[output],
        }
    }
}

/// The shared table of tropical `e_k(x₁..x_n)`, `k = 1..=n`.
#[derive(Clone, Debug)]
pub struct ElementaryBank {
    builder: CircuitBuilder,
    taps: Vec<usize>,
}

impl ElementaryBank {
    /// Builds the table inside `builder` and returns tap gates for `e_1..e_n`.
    /// The diagonal `E[j][j] = x₁ ⊙ ⋯ ⊙ x_j` is a product chain and
    /// `E[j][1] = E[j-1][1] ⊕ x_j`, so no tropical zero is needed.
    pub fn build_in(builder: &mut CircuitBuilder, n: usize) -> Vec<usize> {
        if n == 0 {
            return Vec::new();
        }
        let x: Vec<usize> = (0..n).map(|i| builder.input(i)).collect();
        // row[k-1] = E[j][k]
        let mut row = vec![x[0]];
        for j in 1..n {
            let mut next = Vec::with_capacity(j + 1);
            next.push(builder.oplus(row[0], x[j]));
            for k in 1..j {
                let shifted = builder.odot(x[j], row[k - 1]);
                next.push(builder.oplus(row[k], shifted));
            }
            next.push(builder.odot(row[j - 1], x[j]));
            row = next;
        }
        row
    }

    pub fn new(n: usize) -> Self {
        let mut builder = CircuitBuilder::new(n);
        let taps = Self::build_in(&mut builder, n);
        ElementaryBank { builder, taps }
    }

    pub fn n(&self) -> usize {
        self.taps.len()
    }

    /// Gate index of `e_k` in the full table.
    pub fn tap(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.taps.get(i)).copied()
    }

    /// ⊕/⊙ gates in the whole table, shared by all taps.
    pub fn op_gates(&self) -> usize {
        self.builder.op_gates()
    }

    /// The table pruned to the gates `e_k` depends on.
    pub fn circuit(&self, k: usize) -> Option<Circuit> {
        self.tap(k).map(|t| self.builder.finish(t))
    }
}

/// `Trop(s_λ(x₁..x_n)) = ⊙_{k=1..λ₁} Trop(e_{λ'_k})`.
pub fn build_schur_circuit(lambda: &Partition, n: usize) -> Result<Circuit> {
    if lambda.len() > n {
        return Err(Error::ZeroPolynomial);
    }
    let mut b = CircuitBuilder::new(n);
    if lambda.is_empty() {
        let c = b.constant(BigRational::zero());
        return Ok(b.finish(c));
    }
    let taps = ElementaryBank::build_in(&mut b, n);
    let mut acc: Option<usize> = None;
    for &col in lambda.conjugate().parts() {
        let t = taps[col as usize - 1];
        acc = Some(match acc {
            None => t,
            Some(a) => b.odot(a, t),
        });
    }
    Ok(b.finish(acc.expect("nonempty λ")))
}

/// Circuit for `Trop(s_{λ/μ}(x₁..x_n))`: the Schur circuit of
/// `β = β_max(w_{λ/μ})`.
pub fn build_skew_circuit(shape: &SkewShape, n: usize) -> Result<Circuit> {
    if shape.max_column_length() as usize > n {
        return Err(Error::ZeroPolynomial);
    }
    build_schur_circuit(&beta_max(&w_from_skew(shape)), n)
}

/// Circuit for `Trop(F_w(x₁..x_n))`: the Schur circuit of `β_max(w)`.
pub fn build_stanley_circuit(w: &Permutation, n: usize) -> Result<Circuit> {
    let beta = beta_max(w);
    if beta.len() > n {
        return Err(Error::ZeroPolynomial);
    }
    build_schur_circuit(&beta, n)
}

/// Whether the circuit's symbolic result equals `Trop(f)` under the
/// semiring axioms with idempotence.
pub fn verify_evaluates(c: &Circuit, f: &ExactPolynomial, term_cap: usize) -> Result<bool> {
    let target = tropicalize(f)?;
    let got = c.expand(Mode::Axiomatic, term_cap)?;
    Ok(trop_equal(&got, &target, Mode::Axiomatic))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitJson {
    gates: Vec<GateJson>,
    output: usize,
    vars: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
enum GateJson {
    Input { var: usize },
    Const { val: String },
    Oplus { args: [usize; 2] },
    Odot { args: [usize; 2] },
}

impl From<Circuit> for CircuitJson {
    fn from(c: Circuit) -> Self {
        CircuitJson {
            vars: c.nvars,
            output: c.output,
            gates: c
                .gates
                .into_iter()
                .map(|g| match g {
                    Gate::Input(var) => GateJson::Input { var },
                    Gate::Const(v) => GateJson::Const { val: v.to_string() },
                    Gate::Oplus(a, b) => GateJson::Oplus { args: [a, b] },
                    Gate::Odot(a, b) => GateJson::Odot { args: [a, b] },
                })
                .collect(),
        }
    }
}

impl TryFrom<CircuitJson> for Circuit {
    type Error = Error;

    fn try_from(j: CircuitJson) -> Result<Self> {
        let gates = j
            .gates
            .into_iter()
            .map(|g| {
                Ok(match g {
                    GateJson::Input { var } => Gate::Input(var),
                    GateJson::Const { val } => Gate::Const(
                        val.parse()
                            .map_err(|e| Error::Parse(format!("constant {val:?}: {e}")))?,
                    ),
                    GateJson::Oplus { args: [a, b] } => Gate::Oplus(a, b),
                    GateJson::Odot { args: [a, b] } => Gate::Odot(a, b),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Circuit::new(j.vars, gates, j.output)
    }
}

//! Admissibility of a curve dataset at parameters `(h, n)`.

use std::fmt;

use mcg_engine::{acts_trivially, basis_curves, dehn_twist, homology_action};
use surface_model::Arrangement;

use crate::algebra::{char_poly, format_poly, poly_mul, Poly};
use crate::synthesis::{c_name, chain_name, check_parameters, d_name, fiber_genus};
use crate::words::{gurtas_word, torus_knot_monodromy};
use crate::FibrationError;

/// One checked clause with an optional witness of failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub id: &'static str,
    pub statement: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractReport {
    pub h: usize,
    pub n: usize,
    pub clauses: Vec<Clause>,
}

impl ContractReport {
    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.holds)
    }
}

impl fmt::Display for ContractReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            write!(f, "[{}] ({}) {}", if c.holds { "ok" } else { "FAIL" }, c.id, c.statement)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The validation predicates a dataset must satisfy at `(h, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetContract {
    pub h: usize,
    pub n: usize,
}

/// Names of the curve battery used to certify triviality: the basis curves,
/// the chain and the `c` curves, plus the `D` curves.
pub fn battery_names(h: usize, n: usize) -> Vec<String> {
    let mut names: Vec<String> = basis_curves(fiber_genus(h, n)).into_iter().map(|c| c.name).collect();
    names.extend((1..=2 * h).map(chain_name));
    names.extend((1..=2 * n - 1).map(c_name));
    names.extend((0..=2 * h).map(d_name));
    names
}

/// The dataset with the basis curves added, ready for battery checks.
pub fn with_battery(arr: &Arrangement) -> Result<Arrangement, FibrationError> {
    let missing: Vec<_> =
        basis_curves(arr.surface().genus()).into_iter().filter(|c| !arr.contains(&c.name)).collect();
    Ok(if missing.is_empty() { arr.clone() } else { arr.with_curves(missing)? })
}

/// `(t^{2h+1} + 1)`, the numerator of the Alexander polynomial of `T(2, 2h+1)`.
pub fn alexander_numerator(h: usize) -> Poly {
    let mut p = vec![0; 2 * h + 2];
    p[0] = 1;
    p[2 * h + 1] = 1;
    p
}

/// Characteristic polynomial of the torus-knot monodromy on the first `2h`
/// basis vectors, or `None` when the chain leaves that block.
pub fn torus_knot_block_poly(arr: &Arrangement, h: usize) -> Result<Option<Poly>, FibrationError> {
    for k in 1..=2 * h {
        if arr.homology_class(&chain_name(k))?.0[2 * h..].iter().any(|&x| x != 0) {
            return Ok(None);
        }
    }
    let m = homology_action(arr, &torus_knot_monodromy(h)?)?;
    Ok(Some(char_poly(&m.block(2 * h))))
}

impl DatasetContract {
    pub fn new(h: usize, n: usize) -> Result<Self, FibrationError> {
        check_parameters(h, n)?;
        Ok(DatasetContract { h, n })
    }

    pub fn required_names(&self) -> Vec<String> {
        let (h, n) = (self.h, self.n);
        let mut names: Vec<String> = (1..=2 * h).map(chain_name).collect();
        names.extend((1..=2 * n - 1).map(c_name));
        names.extend((0..=2 * h).map(d_name));
        names
    }

    /// Evaluates every clause. Structural problems (wrong genus, missing
    /// curves) are reported as a failed first clause.
    pub fn check(&self, arr: &Arrangement) -> Result<ContractReport, FibrationError> {
        let (h, n) = (self.h, self.n);
        let mut clauses = Vec::new();
        let genus = fiber_genus(h, n);
        let missing: Vec<String> = self.required_names().into_iter().filter(|c| !arr.contains(c)).collect();
        let mut shape = Clause {
            id: "shape",
            statement: format!("genus {genus}, curves a1..a{}, c1..c{}, D0..D{}", 2 * h, 2 * n - 1, 2 * h),
            holds: arr.surface().genus() == genus && missing.is_empty(),
            witness: None,
        };
        if arr.surface().genus() != genus {
            shape.witness = Some(format!("genus is {}", arr.surface().genus()));
        } else if !missing.is_empty() {
            shape.witness = Some(format!("missing {}", missing.join(", ")));
        }
        let stop = !shape.holds;
        clauses.push(shape);
        if stop {
            return Ok(ContractReport { h, n, clauses });
        }
        let mut embedded = Clause {
            id: "embedded",
            statement: "every curve is embedded and the layout is valid".into(),
            holds: arr.validate().is_valid(),
            witness: None,
        };
        for name in self.required_names() {
            if !arr.is_embedded(&name)? {
                embedded.holds = false;
                embedded.witness = Some(name);
                break;
            }
        }
        clauses.push(embedded);

        let i = |x: &str, y: &str| arr.geometric_intersection(x, y);
        let mut a = Clause { id: "a", statement: "i(a_l, c_k) = 0".into(), holds: true, witness: None };
        'a: for l in 1..=2 * h {
            for k in 1..=2 * n - 1 {
                let v = i(&chain_name(l), &c_name(k))?;
                if v != 0 {
                    a.holds = false;
                    a.witness = Some(format!("i(a{l}, c{k}) = {v}"));
                    break 'a;
                }
            }
        }
        clauses.push(a);

        let mut b = Clause { id: "b", statement: "i(D_j, a_l) = 0 for l >= j+2".into(), holds: true, witness: None };
        'b: for j in 0..=2 * h {
            for l in j + 2..=2 * h {
                let v = i(&d_name(j), &chain_name(l))?;
                if v != 0 {
                    b.holds = false;
                    b.witness = Some(format!("i(D{j}, a{l}) = {v}"));
                    break 'b;
                }
            }
        }
        clauses.push(b);

        let mut c = Clause {
            id: "c",
            statement: "i(t_{a_(j+1)}(D_j), a_l) = 0 for l <= j".into(),
            holds: true,
            witness: None,
        };
        'c: for j in 0..2 * h {
            let t = dehn_twist(arr, &chain_name(j + 1), 1, &[&d_name(j)])?;
            for l in 1..=j {
                let v = t.geometric_intersection(&d_name(j), &chain_name(l))?;
                if v != 0 {
                    c.holds = false;
                    c.witness = Some(format!("i(t_a{}(D{j}), a{l}) = {v}", j + 1));
                    break 'c;
                }
            }
        }
        clauses.push(c);

        let full = with_battery(arr)?;
        let names = battery_names(h, n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let w2 = gurtas_word(h, n)?.pow(2);
        let trivial = acts_trivially(&full, &w2, &refs)?;
        clauses.push(Clause {
            id: "d",
            statement: "W^2 acts trivially on homology and on the battery".into(),
            holds: trivial,
            witness: (!trivial).then(|| "a battery curve moved or the homology action is not the identity".into()),
        });

        let target = alexander_numerator(h);
        let (holds, witness) = match torus_knot_block_poly(arr, h)? {
            None => (false, Some("chain leaves the first 2h basis vectors".to_string())),
            Some(p) => {
                let q = poly_mul(&p, &[1, 1]);
                let neg: Poly = target.iter().map(|x| -x).collect();
                let ok = q == target || q == neg;
                (ok, (!ok).then(|| format!("char poly {}", format_poly(&p))))
            }
        };
        clauses.push(Clause {
            id: "e",
            statement: format!("det(tI - M_Phi|block) (t + 1) = t^{} + 1", 2 * h + 1),
            holds,
            witness,
        });
        Ok(ContractReport { h, n, clauses })
    }

    pub fn require(&self, arr: &Arrangement) -> Result<ContractReport, FibrationError> {
        let r = self.check(arr)?;
        match r.first_failure() {
            None => Ok(r),
            Some(c) => Err(FibrationError::ContractViolation {
                clause: c.id.to_string(),
                detail: c.witness.clone().unwrap_or_default(),
            }),
        }
    }
}

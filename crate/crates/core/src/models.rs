//! Hierarchical log-linear model matrices, logit models, and their
//! identification with Lawrence liftings.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::intmat;
use crate::lawrence;

/// A hierarchical model: generators delta over variables 1..m (stored as
/// bitmasks, bit i-1 for variable i, inclusion-maximal, sorted) and one
/// positive level count per variable. A level of 0 marks a variable whose
/// level is still symbolic and must be bound before building a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSpec {
    m: usize,
    delta: Vec<u32>,
    levels: Vec<usize>,
}

impl ModelSpec {
    /// Generators given as sets of variable numbers 1..m where
    /// m = levels.len(). Redundant (contained) generators are dropped.
    pub fn new(generators: &[Vec<usize>], levels: Vec<usize>) -> Result<ModelSpec> {
        let m = levels.len();
        if m == 0 || m > 32 {
            return Err(Error::BadModel(format!(
                "variable count {m} out of the supported range 1..=32"
            )));
        }
        let mut masks: Vec<u32> = Vec::new();
        for g in generators {
            if g.is_empty() {
                return Err(Error::BadModel("empty generator".into()));
            }
            let mut mask = 0u32;
            for &v in g {
                if v < 1 || v > m {
                    return Err(Error::BadModel(format!(
                        "variable {v} outside 1..={m}"
                    )));
                }
                mask |= 1 << (v - 1);
            }
            masks.push(mask);
        }
        if masks.is_empty() {
            return Err(Error::BadModel("no generators".into()));
        }
        // keep only inclusion-maximal generators
        let mut keep: Vec<u32> = Vec::new();
        for &a in &masks {
            if masks.iter().any(|&b| b != a && b & a == a) {
                continue;
            }
            if !keep.contains(&a) {
                keep.push(a);
            }
        }
        keep.sort();
        Ok(ModelSpec {
            m,
            delta: keep,
            levels,
        })
    }

    pub fn num_variables(&self) -> usize {
        self.m
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn generators(&self) -> Vec<Vec<usize>> {
        self.delta.iter().map(|&mask| mask_vars(mask)).collect()
    }

    pub fn bind_level(&self, var: usize, level: usize) -> Result<ModelSpec> {
        if var < 1 || var > self.m || level == 0 {
            return Err(Error::BadModel(format!(
                "cannot bind level {level} for variable {var}"
            )));
        }
        let mut levels = self.levels.clone();
        levels[var - 1] = level;
        Ok(ModelSpec {
            m: self.m,
            delta: self.delta.clone(),
            levels,
        })
    }

    /// Standard bracket notation; single digits when every variable is
    /// at most 9, the comma form otherwise.
    pub fn to_bracket_string(&self) -> String {
        let commas = self.m > 9;
        let mut out = String::new();
        for &mask in &self.delta {
            out.push('[');
            let vars = mask_vars(mask);
            for (k, v) in vars.iter().enumerate() {
                if commas && k > 0 {
                    out.push(',');
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        out
    }
}

fn mask_vars(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Parse "[12][23]" (single digits) or "[1,2][2,13]" (comma form).
/// Returns the generator sets; variable count comes from the levels.
pub fn parse_brackets(s: &str) -> Result<Vec<Vec<usize>>> {
    let err = |col: usize, msg: &str| Error::Parse {
        line: 1,
        column: col + 1,
        message: msg.into(),
    };
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < bytes.len() {
        if bytes[pos] != b'[' {
            return Err(err(pos, "expected '['"));
        }
        let close = s[pos..]
            .find(']')
            .map(|k| pos + k)
            .ok_or_else(|| err(pos, "unclosed '['"))?;
        let inner = &s[pos + 1..close];
        if inner.is_empty() {
            return Err(err(pos + 1, "empty generator"));
        }
        let mut vars = Vec::new();
        if inner.contains(',') {
            let mut col = pos + 1;
            for part in inner.split(',') {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| err(col, "expected a variable number"))?;
                if v == 0 {
                    return Err(err(col, "variables are numbered from 1"));
                }
                vars.push(v);
                col += part.len() + 1;
            }
        } else {
            for (k, c) in inner.char_indices() {
                let d = c
                    .to_digit(10)
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| err(pos + 1 + k, "expected a digit 1-9"))?;
                vars.push(d as usize);
            }
        }
        out.push(vars);
        pos = close + 1;
    }
    if out.is_empty() {
        return Err(err(0, "expected at least one [generator]"));
    }
    Ok(out)
}

/// The 0-1 configuration of the model: columns indexed by full cells
/// (i_1..i_m) in row-major order (variable 1 slowest), rows indexed by
/// (generator, marginal cell of the generator), entry 1 exactly when the
/// cell restricts to the marginal cell.
pub fn model_matrix(spec: &ModelSpec) -> Result<Configuration> {
    if let Some(v) = spec.levels.iter().position(|&l| l == 0) {
        return Err(Error::BadModel(format!(
            "level of variable {} is unbound",
            v + 1
        )));
    }
    let m = spec.m;
    let n: usize = spec.levels.iter().product();
    let mut row_offsets = Vec::with_capacity(spec.delta.len());
    let mut d = 0usize;
    for &mask in &spec.delta {
        row_offsets.push(d);
        let size: usize = mask_vars(mask).iter().map(|&v| spec.levels[v - 1]).product();
        d += size;
    }
    let mut entries = vec![0i64; d * n];
    for cell in 0..n {
        // decode, variable m fastest
        let mut digits = vec![0usize; m];
        let mut c = cell;
        for v in (0..m).rev() {
            digits[v] = c % spec.levels[v];
            c /= spec.levels[v];
        }
        for (k, &mask) in spec.delta.iter().enumerate() {
            let mut marg = 0usize;
            for &v in &mask_vars(mask) {
                marg = marg * spec.levels[v - 1] + digits[v - 1];
            }
            entries[(row_offsets[k] + marg) * n + cell] = 1;
        }
    }
    Configuration::new(d, n, entries)
}

/// The logit model on m+1 variables: the full interaction of the original
/// variables, plus each generator extended by the response variable m+1.
/// The response level stays symbolic until bound.
pub fn logit_model(spec: &ModelSpec) -> Result<ModelSpec> {
    let m = spec.m;
    let mut generators: Vec<Vec<usize>> = vec![(1..=m).collect()];
    for &mask in &spec.delta {
        let mut g = mask_vars(mask);
        g.push(m + 1);
        generators.push(g);
    }
    let mut levels = spec.levels.clone();
    levels.push(0); // symbolic response level
    ModelSpec::new(&generators, levels)
}

/// Check the identification of the r-th lifting of the model matrix with
/// the logit model's matrix: the two kernel lattices must coincide under
/// the cell bijection that pairs lifting column (row j, base cell i) with
/// the logit cell having response level j. Compared via Hermite forms of
/// kernel bases.
pub fn verify_logit_correspondence(spec: &ModelSpec, r: usize) -> Result<bool> {
    assert!(r >= 1);
    let base = model_matrix(spec)?;
    let n = base.n();
    let lifted = lawrence::lift(&base, r)?;
    let logit = logit_model(spec)?;
    let logit_bound = logit.bind_level(spec.m + 1, r)?;
    let m2 = model_matrix(&logit_bound)?;
    if m2.n() != r * n {
        return Ok(false);
    }
    // lifting column j*n + i corresponds to logit cell i*r + j (response fastest)
    let k1 = lifted.matrix().kernel_lattice_basis()?;
    let mapped: Vec<Vec<i64>> = k1
        .iter()
        .map(|v| {
            let mut w = vec![0i64; r * n];
            for j in 0..r {
                for i in 0..n {
                    w[i * r + j] = v[j * n + i];
                }
            }
            w
        })
        .collect();
    let k2 = m2.kernel_lattice_basis()?;
    intmat::same_lattice(&mapped, &k2, r * n)
}

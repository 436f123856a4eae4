//! Reading polynomial files and choosing the ring they live in.

use std::path::Path;

use cactus_core::poly::{parse_lines, scan_variables, Flavor, Poly, Ring, Subspace};
use cactus_core::{Error, PrimeField};

use crate::error::{CliError, CliResult};

/// Raw text of an input file, kept so it can be re-parsed under other primes.
#[derive(Clone, Debug)]
pub struct Source {
    pub text: String,
}

impl Source {
    pub fn read(path: &Path) -> CliResult<Source> {
        let text =
            std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        if text.lines().all(|l| l.split('#').next().unwrap_or("").trim().is_empty()) {
            return Err(Error::Parse { line: 1, column: 1, message: "input file is empty".into() }.into());
        }
        Ok(Source { text })
    }

    /// Ring for the file: x0 present means forms in x0..xn, otherwise x1..xn (or y1..yn).
    /// Dual variables a_i give the matching dual ring. `n` widens the ring, never shrinks it.
    pub fn ring(&self, field: PrimeField, n: Option<usize>, min_n: usize) -> CliResult<Ring> {
        let scan = scan_variables(&self.text);
        let (flavor, range) = match (scan.primal, scan.dual) {
            (Some(_), Some(_)) => {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: "primal (x, y) and dual (a) variables are mixed in one file".into(),
                }
                .into())
            }
            (None, Some(r)) => (Flavor::Dual, Some(r)),
            (p, None) => (Flavor::Primal, p),
        };
        let (lo, hi) = range.map_or((1, 0), |(lo, hi)| (lo as usize, hi as usize));
        let projective = lo == 0;
        let needed = hi.max(min_n).max(1);
        let n = match n {
            Some(n) if n < hi => {
                return Err(CliError::Usage(format!("--n {n} is smaller than the largest variable index {hi}")))
            }
            Some(n) => n,
            None => needed,
        };
        let ring = if projective { Ring::projective(field, n)? } else { Ring::affine(field, n)? };
        Ok(if flavor == Flavor::Dual { ring.dual() } else { ring })
    }

    pub fn polys(&self, ring: &Ring) -> CliResult<Vec<Poly>> {
        Ok(parse_lines(&self.text, ring)?)
    }

    pub fn single(&self, ring: &Ring) -> CliResult<Poly> {
        let mut polys = self.polys(ring)?;
        if polys.len() != 1 {
            return Err(CliError::Usage(format!("expected one polynomial, found {}", polys.len())));
        }
        Ok(polys.pop().unwrap())
    }

    pub fn subspace(&self, ring: &Ring) -> CliResult<Subspace> {
        Ok(Subspace::span(*ring, &self.polys(ring)?)?)
    }
}

//! Run configuration: a `key = value` file, then command-line overrides.

use spexlab::family::Caps;
use spexlab::search::SearchOptions;
use spexlab::spectral::EigenOptions;
use spexlab::{Error, Result};
use std::path::{Path, PathBuf};

pub const CONFIG_ENV: &str = "SPEXLAB_CONFIG";

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    /// Relative residual target for the iterative eigensolver.
    pub eigen_tol: f64,
    /// Components up to this order use the dense solver.
    pub jacobi_max: usize,
    /// Spectral radii this close to the best are compared exactly.
    pub tie_tol: f64,
    /// Certification width for exact polynomial roots.
    pub root_tol: f64,
    pub caps: Caps,
    /// Worker threads (0 = one per core).
    pub workers: usize,
    pub out_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        let eigen = EigenOptions::default();
        Config {
            eigen_tol: eigen.tol,
            jacobi_max: eigen.jacobi_max,
            tie_tol: 1e-9,
            root_tol: 1e-12,
            caps: Caps::default(),
            workers: 0,
            out_dir: None,
            seed: 42,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::ParamRange(format!("bad value `{value}` for `{key}`")))
}

impl Config {
    /// Apply one setting. Keys: `eigen_tol`, `jacobi_max`, `tie_tol`,
    /// `root_tol`, `workers`, `out`, `seed` and `cap.<name>` for each field
    /// of [`Caps`].
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let (key, value) = (key.trim(), value.trim());
        match key {
            "eigen_tol" => self.eigen_tol = parse_num(key, value)?,
            "jacobi_max" => self.jacobi_max = parse_num(key, value)?,
            "tie_tol" => self.tie_tol = parse_num(key, value)?,
            "root_tol" => self.root_tol = parse_num(key, value)?,
            "workers" => self.workers = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "out" => self.out_dir = Some(PathBuf::from(value)),
            "cap.cycle_order" => self.caps.cycle_order = parse_num(key, value)?,
            "cap.disjoint_cycle_order" => self.caps.disjoint_cycle_order = parse_num(key, value)?,
            "cap.minor_pattern" => self.caps.minor_pattern = parse_num(key, value)?,
            "cap.minor_host" => self.caps.minor_host = parse_num(key, value)?,
            "cap.counterexample_order" => self.caps.counterexample_order = parse_num(key, value)?,
            _ => return Err(Error::ParamRange(format!("unknown config key `{key}`"))),
        }
        Ok(())
    }

    /// Apply a `key=value` assignment.
    pub fn set_assignment(&mut self, text: &str) -> Result<()> {
        let (k, v) = text
            .split_once('=')
            .ok_or_else(|| Error::Syntax { pos: 0, msg: format!("expected key=value, got `{text}`") })?;
        self.set(k, v)
    }

    /// Parse a config file body: one `key = value` per line, `#` comments.
    pub fn parse_into(&mut self, body: &str) -> Result<()> {
        for (i, line) in body.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Syntax { pos: i + 1, msg: format!("expected key = value on line {}", i + 1) })?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let body = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.parse_into(&body)
    }

    pub fn validated(self) -> Result<Config> {
        for (name, v) in [("eigen_tol", self.eigen_tol), ("tie_tol", self.tie_tol), ("root_tol", self.root_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::ParamRange(format!("{name} must be positive, got {v}")));
            }
        }
        if self.jacobi_max == 0 {
            return Err(Error::ParamRange("jacobi_max must be positive".into()));
        }
        let caps = self.caps.clone().validated()?;
        Ok(Config { caps, ..self })
    }

    pub fn eigen(&self) -> EigenOptions {
        EigenOptions { jacobi_max: self.jacobi_max, tol: self.eigen_tol }
    }

    pub fn search(&self, connected: bool) -> SearchOptions {
        SearchOptions { connected, workers: self.workers, caps: self.caps.clone(), eigen: self.eigen(), tie_tol: self.tie_tol }
    }
}

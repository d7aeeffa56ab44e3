//! Rendering a command's result to stdout or to files.

use crate::Format;
use serde::Serialize;
use serde_json::Value;
use spexlab::{Error, Result};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

/// One command result in every format it supports.
pub struct Emission {
    /// File stem used with `--out`.
    pub name: String,
    pub json: Value,
    pub csv: Option<String>,
    pub md: Option<String>,
}

impl Emission {
    pub fn new(name: &str, value: &impl Serialize) -> Emission {
        Emission {
            name: name.to_string(),
            json: serde_json::to_value(value).expect("reports serialize"),
            csv: None,
            md: None,
        }
    }

    pub fn csv(mut self, csv: String) -> Emission {
        self.csv = Some(csv);
        self
    }

    pub fn md(mut self, md: String) -> Emission {
        self.md = Some(md);
        self
    }
}

fn strip_key(v: &mut Value, key: &str) {
    match v {
        Value::Object(map) => {
            map.remove(key);
            map.values_mut().for_each(|x| strip_key(x, key));
        }
        Value::Array(items) => items.iter_mut().for_each(|x| strip_key(x, key)),
        _ => {}
    }
}

fn json_text(e: &Emission, timestamp: bool) -> String {
    let mut v = e.json.clone();
    if timestamp {
        if let Value::Object(map) = &mut v {
            let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            map.insert("generated_unix".into(), Value::from(now));
        }
    } else {
        strip_key(&mut v, "runtime_ms");
    }
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn rendered(e: &Emission, format: Format, timestamp: bool) -> Result<String> {
    let missing = |f: &str| Error::ParamRange(format!("`{}` output is not available as {f}", e.name));
    match format {
        Format::Json => Ok(json_text(e, timestamp)),
        Format::Csv => e.csv.clone().ok_or_else(|| missing("csv")),
        Format::Md => e.md.clone().ok_or_else(|| missing("markdown")),
    }
}

/// Print the requested format, or write every available format into `out`.
pub fn emit(e: &Emission, format: Format, timestamp: bool, out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            print!("{}", rendered(e, format, timestamp)?);
            Ok(())
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let mut files = vec![("json", json_text(e, timestamp))];
            files.extend(e.csv.clone().map(|c| ("csv", c)));
            files.extend(e.md.clone().map(|m| ("md", m)));
            for (ext, body) in files {
                let path = dir.join(format!("{}.{ext}", e.name));
                std::fs::write(&path, body)?;
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

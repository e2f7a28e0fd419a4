//! Sweep files and CSV records.
//!
//! A sweep line is whitespace-separated `key=v1,v2,...` items. `family` and
//! `strategies` are required; every other key is a generator parameter
//! (plus `c` for the bounded strategy) and lists expand as a product.
//!
//! ```text
//! family=random n=50,100,200 cap=5 density=0.05 seed=1 strategies=bounded,greedy
//! ```

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;

use crate::dimension::verify_realizer;
use crate::error::{Error, Result};

use super::{generate, realize, Family, Strategy};

pub const CSV_HEADER: &str = "instance,params,n,predbound,strategy,size,status,ms,seed";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepLine {
    pub family: Family,
    pub strategies: Vec<Strategy>,
    /// Parameter names with their candidate values, in file order.
    pub params: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub instance: String,
    pub params: String,
    pub n: usize,
    pub predbound: usize,
    pub strategy: String,
    pub size: usize,
    /// `ok`, or `failed` when the construction gave up.
    pub status: String,
    pub ms: u128,
    pub seed: u64,
}

impl BenchRecord {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.instance, self.params, self.n, self.predbound, self.strategy, self.size, self.status, self.ms, self.seed
        )
    }
}

pub fn parse_sweep(text: &str) -> Result<Vec<SweepLine>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut family = None;
        let mut strategies = None;
        let mut params = Vec::new();
        for item in line.split_whitespace() {
            let (key, values) = item
                .split_once('=')
                .ok_or_else(|| Error::parse(no + 1, format!("`{item}` is not key=values")))?;
            let values: Vec<String> = values.split(',').filter(|v| !v.is_empty()).map(String::from).collect();
            if values.is_empty() {
                return Err(Error::parse(no + 1, format!("no values for `{key}`")));
            }
            match key {
                "family" => {
                    let f = <Family as ValueEnum>::from_str(&values[0], true)
                        .map_err(|_| Error::parse(no + 1, format!("unknown family `{}`", values[0])))?;
                    family = Some(f);
                }
                "strategies" | "strategy" => {
                    let s = values
                        .iter()
                        .map(|v| Strategy::from_name(v).ok_or_else(|| Error::parse(no + 1, format!("unknown strategy `{v}`"))))
                        .collect::<Result<Vec<_>>>()?;
                    strategies = Some(s);
                }
                _ => params.push((key.to_string(), values)),
            }
        }
        out.push(SweepLine {
            family: family.ok_or_else(|| Error::parse(no + 1, "missing `family`"))?,
            strategies: strategies.ok_or_else(|| Error::parse(no + 1, "missing `strategies`"))?,
            params,
        });
    }
    Ok(out)
}

fn expand(params: &[(String, Vec<String>)]) -> Vec<Vec<(String, String)>> {
    let mut combos: Vec<Vec<(String, String)>> = vec![Vec::new()];
    for (key, values) in params {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |v| {
                    let mut next = c.clone();
                    next.push((key.clone(), v.clone()));
                    next
                })
            })
            .collect();
    }
    combos
}

/// Runs every instance and strategy in file order. A construction that
/// gives up yields a `failed` row; a realizer that fails verification is
/// an error.
pub fn run_sweep(lines: &[SweepLine], default_seed: u64, timing: bool) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    let mut index = 0usize;
    for line in lines {
        for combo in expand(&line.params) {
            let mut map: BTreeMap<String, String> = combo.iter().cloned().collect();
            let seed = match map.get("seed") {
                Some(s) => s.parse().map_err(|_| Error::Domain(format!("bad seed `{s}`")))?,
                None => {
                    map.insert("seed".into(), default_seed.to_string());
                    default_seed
                }
            };
            let c: Option<usize> = map
                .get("c")
                .map(|v| v.parse().map_err(|_| Error::Domain(format!("bad value `{v}` for `c`"))))
                .transpose()?;
            let p = generate(line.family, &map)?;
            let name = format!("{}-{index}", line.family.to_possible_value().expect("named").get_name());
            let params: Vec<String> = combo.iter().map(|(k, v)| format!("{k}={v}")).collect();
            for &strategy in &line.strategies {
                let start = Instant::now();
                let (size, status) = match realize(&p, strategy, c, seed) {
                    Ok((r, _)) => {
                        let verdict = verify_realizer(&p, &r)?;
                        if !verdict.is_ok() {
                            return Err(Error::InvalidRealizer(format!("{name} {}: {verdict}", strategy.name())));
                        }
                        (r.size(), "ok")
                    }
                    Err(_) => (0, "failed"),
                };
                records.push(BenchRecord {
                    instance: name.clone(),
                    params: params.join(";"),
                    n: p.len(),
                    predbound: p.predecessor_bound(),
                    strategy: strategy.name().to_string(),
                    size,
                    status: status.to_string(),
                    ms: if timing { start.elapsed().as_millis() } else { 0 },
                    seed,
                });
            }
            index += 1;
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_rows_per_instance_and_strategy() {
        let lines = parse_sweep("family=random n=50,100,200 cap=5 density=0.05 seed=1 strategies=bounded,greedy\n").unwrap();
        let rows = run_sweep(&lines, 0, false).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.status == "ok" && r.predbound <= 5));
        assert_eq!(rows[0].params, "n=50;cap=5;density=0.05;seed=1");
        assert_eq!(rows[0].to_csv_row().split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn subset_code_sizes_grow() {
        let lines = parse_sweep("# sizes\nfamily=subsets n=4,8,16 k=2 strategies=subset-code\n").unwrap();
        let rows = run_sweep(&lines, 0, false).unwrap();
        let sizes: Vec<usize> = rows.iter().map(|r| r.size).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "{sizes:?}");
    }

    #[test]
    fn subset_code_on_other_family_fails_row() {
        let lines = parse_sweep("family=chain n=3 strategies=subset-code,greedy").unwrap();
        let rows = run_sweep(&lines, 0, false).unwrap();
        assert_eq!(rows[0].status, "failed");
        assert_eq!(rows[1].size, 1);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_sweep("n=3 strategies=greedy").is_err());
        assert!(parse_sweep("family=chain n=3").is_err());
        assert!(parse_sweep("family=torus n=3 strategies=greedy").is_err());
        assert!(parse_sweep("family=chain n strategies=greedy").is_err());
    }
}

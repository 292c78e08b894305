//! Parameter sweeps over the classical families, with deterministic row
//! order (lexicographic in the family parameters) and text/CSV/JSON output.
//! Rows may be evaluated in parallel; results are buffered and emitted in
//! parameter order, so output bytes do not depend on `--jobs`.

use clap::ValueEnum;
use rayon::prelude::*;
use rhocert_core::report::{run_check, CheckOptions, Report, SquareIntegrable};
use rhocert_core::spec::{Ambient, PairSpec, Subgroup};
use rhocert_core::{enumerate, EngineOptions, Error};

use crate::render::{disc_rel_str, disc_set_str};
use crate::{CliError, SweepArgs};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// SL(n,R) / prod SL(n_k,R), one row per partition of n.
    SlBlocks,
    /// SL(n,R) / SO(p,q), one row per (n, p, q) with p, q >= 1.
    SoInSl,
    /// SO(p,q) / prod SO(p_k,q_k), one row per block multiset.
    SoBlocks,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub enum SweepParams {
    SlBlocks { n_min: u32, n_max: u32 },
    SoInSl { n_min: u32, n_max: u32, pq_min: u32 },
    SoBlocks { points: Vec<(u32, u32)> },
}

impl SweepParams {
    pub fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
        match args.family {
            Family::SlBlocks => match (args.n, args.n_max) {
                (Some(n), None) => Ok(SweepParams::SlBlocks { n_min: n, n_max: n }),
                (None, Some(n_max)) => {
                    let n_min = args.n_min.unwrap_or(2);
                    if n_min > n_max {
                        return usage("--n-min exceeds --n-max");
                    }
                    Ok(SweepParams::SlBlocks { n_min, n_max })
                }
                (Some(_), Some(_)) => usage("pass either --n or --n-max, not both"),
                (None, None) => usage("sl-blocks needs --n or --n-max"),
            },
            Family::SoInSl => {
                let Some(n_max) = args.n_max.or(args.n) else {
                    return usage("so-in-sl needs --n-max (or --n)");
                };
                let pq_min = args.pq_min.unwrap_or(3);
                let n_min = args.n_min.unwrap_or(pq_min.max(3));
                if n_min > n_max {
                    return usage("--n-min exceeds --n-max");
                }
                Ok(SweepParams::SoInSl {
                    n_min,
                    n_max,
                    pq_min,
                })
            }
            Family::SoBlocks => match (args.p, args.q, args.pq_max) {
                (Some(p), Some(q), None) => Ok(SweepParams::SoBlocks {
                    points: vec![(p, q)],
                }),
                (None, None, Some(pq_max)) => {
                    let mut points = Vec::new();
                    for p in 0..=pq_max {
                        for q in 0..=pq_max - p {
                            points.push((p, q));
                        }
                    }
                    Ok(SweepParams::SoBlocks { points })
                }
                _ => usage("so-blocks needs --pq-max, or both --p and --q"),
            },
        }
    }
}

/// The family's sufficient condition for the strict inequality, evaluated on
/// the raw parameters. `None` when the family claims it unconditionally.
fn family_condition(spec: &PairSpec) -> Option<bool> {
    match (&spec.ambient, &spec.subgroup) {
        (Ambient::Sl { n }, Subgroup::SlBlocks { blocks }) => {
            Some(blocks.len() >= 2 && 2 * blocks[0] <= *n && blocks[0] + blocks[1] < *n)
        }
        (Ambient::So { p, q }, Subgroup::SoBlocks { blocks }) => {
            let max_mixed: u32 = blocks
                .iter()
                .filter(|(a, b)| *a > 0 && *b > 0)
                .map(|(a, b)| a + b)
                .max()
                .unwrap_or(0);
            Some(2 * max_mixed <= p + q + 1)
        }
        (Ambient::Sl { .. }, Subgroup::SoInSl { .. }) => None,
        _ => None,
    }
}

fn blocks_cell(blocks: &[(u32, u32)]) -> String {
    if blocks.is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = blocks.iter().map(|(a, b)| format!("{a}:{b}")).collect();
    parts.join("+")
}

fn partition_cell(blocks: &[u32]) -> String {
    if blocks.is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
    parts.join("+")
}

/// One summary row, derived entirely from a report.
#[derive(Clone, Debug)]
pub struct Row {
    pub params: Vec<(&'static str, String)>,
    pub dim_a: usize,
    pub tempered: bool,
    pub strict: bool,
    pub square_integrable: &'static str,
    pub condition: Option<bool>,
    pub symmetric: Option<bool>,
    pub disc_g: &'static str,
    pub disc_gh: &'static str,
    pub justification: &'static str,
}

fn justification_cell(report: &Report) -> &'static str {
    use rhocert_core::classify::Justification::*;
    match report.disc.justification {
        RankCriterion => "rank-criterion",
        Corollary => "corollary",
        SoClassifierCase1 => "so-classifier-case-1",
        SoClassifierCase2 => "so-classifier-case-2",
        SoClassifierCase3 => "so-classifier-case-3",
        SymmetricRule => "symmetric-rule",
        CompactH => "compact-H",
    }
}

impl Row {
    fn from_report(report: &Report) -> Self {
        let params = match (&report.spec.ambient, &report.spec.subgroup) {
            (Ambient::Sl { n }, Subgroup::SlBlocks { blocks }) => {
                vec![("n", n.to_string()), ("blocks", partition_cell(blocks))]
            }
            (Ambient::Sl { n }, Subgroup::SoInSl { p, q }) => vec![
                ("n", n.to_string()),
                ("p", p.to_string()),
                ("q", q.to_string()),
            ],
            (Ambient::So { p, q }, Subgroup::SoBlocks { blocks }) => vec![
                ("p", p.to_string()),
                ("q", q.to_string()),
                ("blocks", blocks_cell(blocks)),
            ],
            _ => Vec::new(),
        };
        Row {
            params,
            dim_a: report.dim_a,
            tempered: report.tempered.holds,
            strict: report.strict.holds,
            square_integrable: match report.square_integrable {
                SquareIntegrable::Yes => "yes",
                SquareIntegrable::Unknown => "unknown",
            },
            condition: family_condition(&report.spec),
            symmetric: report.disc.symmetric_pair,
            disc_g: disc_set_str(report.disc.disc_g),
            disc_gh: disc_rel_str(report.disc.disc_gh),
            justification: justification_cell(report),
        }
    }

    fn cells(&self) -> Vec<String> {
        let mut cells: Vec<String> = self.params.iter().map(|(_, v)| v.clone()).collect();
        cells.push(self.dim_a.to_string());
        cells.push(if self.tempered { "holds" } else { "fails" }.into());
        cells.push(if self.strict { "holds" } else { "fails" }.into());
        cells.push(self.square_integrable.into());
        if let Some(c) = self.condition {
            cells.push(c.to_string());
        }
        if let Some(s) = self.symmetric {
            cells.push(if s { "yes" } else { "no" }.into());
        }
        cells.push(self.disc_g.into());
        cells.push(self.disc_gh.into());
        cells.push(self.justification.into());
        cells
    }

    fn header(&self) -> Vec<&'static str> {
        let mut header: Vec<&'static str> = self.params.iter().map(|(k, _)| *k).collect();
        header.push("dim_a");
        header.push("tempered");
        header.push("strict");
        header.push("square_integrable");
        if self.condition.is_some() {
            header.push("condition");
        }
        if self.symmetric.is_some() {
            header.push("symmetric");
        }
        header.push("disc_g");
        header.push("disc_gh");
        header.push("justification");
        header
    }
}

pub struct SweepTable {
    pub reports: Vec<Report>,
    pub rows: Vec<Row>,
}

impl SweepTable {
    pub fn render(&self, format: SweepFormat) -> String {
        match format {
            SweepFormat::Csv => self.render_csv(),
            SweepFormat::Text => self.render_text(),
            SweepFormat::Json => {
                let mut out = serde_json::to_string_pretty(&self.reports)
                    .expect("report serialization is infallible");
                out.push('\n');
                out
            }
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.rows.first() {
            out.push_str(&first.header().join(","));
            out.push('\n');
        }
        for row in &self.rows {
            out.push_str(&row.cells().join(","));
            out.push('\n');
        }
        out
    }

    fn render_text(&self) -> String {
        let Some(first) = self.rows.first() else {
            return "(no rows)\n".into();
        };
        let header = first.header();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        let all_cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.cells()).collect();
        for cells in &all_cells {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let fmt_line = |cells: &[String], widths: &[usize]| -> String {
            let mut line = String::new();
            for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{c:<w$}"));
            }
            line.trim_end().to_string()
        };
        let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
        out.push_str(&fmt_line(&header_cells, &widths));
        out.push('\n');
        for cells in &all_cells {
            out.push_str(&fmt_line(cells, &widths));
            out.push('\n');
        }
        out
    }
}

fn sweep_specs(family: Family, params: &SweepParams) -> Vec<PairSpec> {
    let mut specs = Vec::new();
    match (family, params) {
        (Family::SlBlocks, SweepParams::SlBlocks { n_min, n_max }) => {
            for n in *n_min..=*n_max {
                for partition in enumerate::partitions(n) {
                    specs.push(PairSpec {
                        ambient: Ambient::Sl { n },
                        subgroup: Subgroup::SlBlocks { blocks: partition },
                    });
                }
            }
        }
        (
            Family::SoInSl,
            SweepParams::SoInSl {
                n_min,
                n_max,
                pq_min,
            },
        ) => {
            for n in *n_min..=*n_max {
                for p in 1..n {
                    for q in 1..n {
                        let s = p + q;
                        if s >= *pq_min && s <= n {
                            specs.push(PairSpec {
                                ambient: Ambient::Sl { n },
                                subgroup: Subgroup::SoInSl { p, q },
                            });
                        }
                    }
                }
            }
        }
        (Family::SoBlocks, SweepParams::SoBlocks { points }) => {
            for &(p, q) in points {
                for blocks in enumerate::so_block_lists(p, q) {
                    specs.push(PairSpec {
                        ambient: Ambient::So { p, q },
                        subgroup: Subgroup::SoBlocks { blocks },
                    });
                }
            }
        }
        _ => unreachable!("family and params are constructed together"),
    }
    specs
}

fn evaluate(specs: &[PairSpec], engine: &EngineOptions, jobs: usize) -> Result<Vec<Report>, Error> {
    let opts = CheckOptions {
        engine: *engine,
        verbose_weights: false,
        with_timing: false,
    };
    if jobs <= 1 {
        specs.iter().map(|s| run_check(s, &opts)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| specs.par_iter().map(|s| run_check(s, &opts)).collect())
    }
}

pub fn run_sweep(
    family: Family,
    params: &SweepParams,
    engine: &EngineOptions,
    jobs: usize,
) -> Result<SweepTable, CliError> {
    let specs = sweep_specs(family, params);
    let reports = evaluate(&specs, engine, jobs)?;
    let rows = reports.iter().map(Row::from_report).collect();
    Ok(SweepTable { reports, rows })
}

/// Post-pass over a finished table: the family's sufficient condition must
/// imply the strict verdict; the converse direction is informational only.
fn condition_post_pass(out: &mut String, table: &SweepTable) {
    let mut cond_rows = 0usize;
    let mut cond_and_strict = 0usize;
    let mut strict_without_cond = 0usize;
    for row in &table.rows {
        match row.condition {
            Some(true) => {
                cond_rows += 1;
                if row.strict {
                    cond_and_strict += 1;
                }
            }
            Some(false) if row.strict => strict_without_cond += 1,
            _ => {}
        }
    }
    if cond_rows == cond_and_strict {
        out.push_str(&format!(
            "check: condition implies strict inequality: ok ({cond_and_strict}/{cond_rows})\n"
        ));
    } else {
        out.push_str(&format!(
            "check: condition implies strict inequality: MISMATCH ({cond_and_strict}/{cond_rows})\n"
        ));
    }
    out.push_str(&format!(
        "info: strict holds with the condition false on {strict_without_cond} rows\n"
    ));
}

/// The three classical-family sweeps at fixed desk-scale bounds, each with
/// its consistency post-pass.
pub fn run_atlas(engine: &EngineOptions, jobs: usize) -> Result<String, CliError> {
    let mut out = String::new();

    out.push_str("== sl-blocks: SL(n,R) / prod SL(n_k,R), partitions of n, 2 <= n <= 8 ==\n");
    let table = run_sweep(
        Family::SlBlocks,
        &SweepParams::SlBlocks { n_min: 2, n_max: 8 },
        engine,
        jobs,
    )?;
    out.push_str(&table.render(SweepFormat::Text));
    condition_post_pass(&mut out, &table);
    out.push('\n');

    out.push_str("== so-in-sl: SL(n,R) / SO(p,q), 3 <= p+q <= n <= 7 ==\n");
    let table = run_sweep(
        Family::SoInSl,
        &SweepParams::SoInSl {
            n_min: 3,
            n_max: 7,
            pq_min: 3,
        },
        engine,
        jobs,
    )?;
    out.push_str(&table.render(SweepFormat::Text));
    let strict_all = table.rows.iter().all(|r| r.strict);
    out.push_str(&format!(
        "check: strict inequality on every row: {}\n\n",
        if strict_all { "ok" } else { "MISMATCH" }
    ));

    out.push_str("== so-blocks: SO(p,q) / prod SO(p_k,q_k), p+q <= 6 ==\n");
    let mut points = Vec::new();
    for p in 0..=6u32 {
        for q in 0..=6 - p {
            points.push((p, q));
        }
    }
    let table = run_sweep(
        Family::SoBlocks,
        &SweepParams::SoBlocks { points },
        engine,
        jobs,
    )?;
    out.push_str(&table.render(SweepFormat::Text));
    condition_post_pass(&mut out, &table);

    Ok(out)
}

//! Plain-text rendering of a check report. Output is deterministic for a
//! fixed report.

use rhocert_core::jsonnum::{ExactInt, ExactRat};
use rhocert_core::report::{Report, SquareIntegrable, VerdictReport, WeightEntryReport};

fn rat_str(r: &ExactRat) -> String {
    r.0.to_string()
}

fn vec_str(coords: &[ExactRat]) -> String {
    let parts: Vec<String> = coords.iter().map(rat_str).collect();
    format!("({})", parts.join(", "))
}

fn int_vec_str(coords: &[ExactInt]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.0.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn verdict_lines(out: &mut String, label: &str, v: &VerdictReport) {
    out.push_str(&format!(
        "{label:<20}{}\n",
        if v.holds { "holds" } else { "fails" }
    ));
    if let Some(w) = &v.witness {
        out.push_str(&format!("{:<20}{}\n", "  witness:", vec_str(w)));
    }
    if let Some(cert) = &v.certificate {
        if !cert.is_empty() {
            out.push_str("  certificate (ray, rho_g, rho_q):\n");
            for entry in cert {
                out.push_str(&format!(
                    "    {}  {}  {}\n",
                    int_vec_str(&entry.ray),
                    rat_str(&entry.rho_g),
                    rat_str(&entry.rho_q)
                ));
            }
        }
    }
}

fn weight_lines(out: &mut String, label: &str, entries: &[WeightEntryReport]) {
    out.push_str(&format!("  {label}:\n"));
    if entries.is_empty() {
        out.push_str("    (none)\n");
    }
    for e in entries {
        out.push_str(&format!(
            "    {} x{}\n",
            int_vec_str(&e.coeffs),
            e.multiplicity
        ));
    }
}

fn justification_str(j: rhocert_core::classify::Justification) -> &'static str {
    use rhocert_core::classify::Justification::*;
    match j {
        RankCriterion => "rank-criterion",
        Corollary => "corollary",
        SoClassifierCase1 => "so-classifier-case-1",
        SoClassifierCase2 => "so-classifier-case-2",
        SoClassifierCase3 => "so-classifier-case-3",
        SymmetricRule => "symmetric-rule",
        CompactH => "compact-H",
    }
}

pub fn disc_set_str(d: rhocert_core::classify::DiscSet) -> &'static str {
    use rhocert_core::classify::DiscSet::*;
    match d {
        NonEmpty => "nonempty",
        Empty => "empty",
        Unknown => "unknown",
    }
}

pub fn disc_rel_str(d: rhocert_core::classify::DiscRel) -> &'static str {
    use rhocert_core::classify::DiscRel::*;
    match d {
        NonEmpty => "nonempty",
        Empty => "empty",
        SubsetOfDiscG => "subset-of-disc-g",
        Unknown => "unknown",
    }
}

pub fn report_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<20}{}\n",
        "ambient:",
        report.spec.ambient.describe()
    ));
    out.push_str(&format!(
        "{:<20}{}\n",
        "subgroup:",
        report.spec.describe_subgroup()
    ));
    out.push_str(&format!("{:<20}{}\n", "dim_a:", report.dim_a));

    if let Some(w) = &report.weights {
        out.push_str("weights:\n");
        weight_lines(&mut out, "g", &w.g);
        weight_lines(&mut out, "h", &w.h);
        weight_lines(&mut out, "q", &w.q);
    }

    verdict_lines(&mut out, "tempered:", &report.tempered);
    out.push_str(&format!(
        "{:<20}{}\n",
        "  criterion exact:",
        if report.tempered_criterion_exact {
            "yes (ambient is semisimple)"
        } else {
            "no (ambient is not semisimple)"
        }
    ));
    verdict_lines(&mut out, "strict:", &report.strict);
    out.push_str(&format!(
        "{:<20}{}\n",
        "square_integrable:",
        match report.square_integrable {
            SquareIntegrable::Yes => "yes",
            SquareIntegrable::Unknown => "unknown",
        }
    ));
    out.push_str(&format!(
        "{:<20}{} [{}]\n",
        "disc_G:",
        disc_set_str(report.disc.disc_g),
        "rank-criterion"
    ));
    out.push_str(&format!(
        "{:<20}{} [{}]\n",
        "disc_G/H:",
        disc_rel_str(report.disc.disc_gh),
        justification_str(report.disc.justification)
    ));
    if let Some(sym) = report.disc.symmetric_pair {
        out.push_str(&format!(
            "{:<20}{}\n",
            "symmetric_pair:",
            if sym { "yes" } else { "no" }
        ));
    }
    if !report.notes.is_empty() {
        out.push_str("notes:\n");
        for note in &report.notes {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    if let Some(ms) = report.timing_ms {
        out.push_str(&format!("{:<20}{} ms\n", "timing:", ms));
    }
    out
}

//! Command-line front end: classification, restriction, cascade, Pfaffian,
//! component groups, per-form reports, table diffs, and the aggregate
//! verification suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minparab::appendix::{diff, fixture};
use minparab::cascade::{decompose, layers, layers_alt, modular_weights, verify_setup};
use minparab::chevalley::{
    bareiss_det, layer_matrix, pfaffian, structure_constants, verify_jacobi,
};
use minparab::error::Result;
use minparab::groups::{
    dn_group, dn_vector_image_order, natural_character_data, profile,
    verify_vector_rep_decomposition, w8_recipe_collapses, w_group, FiniteGroup,
};
use minparab::latex::{latex_document, latex_section};
use minparab::report::{full_report, OrbitCount};
use minparab::root::{RootSystem, Series};
use minparab::satake::{
    enumerate_abelian_levi_forms, is_m_abelian, r_invariant, restrict, restricted_shape,
    satake_of, CaseTag, RealFormId,
};

#[derive(Parser)]
#[command(
    name = "minparab",
    version,
    about = "Exact structure data of minimal parabolic subgroups with abelian Levi component"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the real forms with abelian Levi factor, with r(g).
    Classify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Restricted root system of one real form, with multiplicities.
    Restrict {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Strongly orthogonal cascade, layers, and derived constants.
    Cascade {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Layer Pfaffians of a split form.
    Pfaffian {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Component groups D_n and W_k with profiles.
    Groups {
        /// One group, as dn:<n> or w:<k>.
        #[arg(long, conflicts_with = "all")]
        group: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full structured report for one real form.
    Report {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Diff computed cascades against the committed golden tables.
    AppendixDiff {
        #[arg(long, conflicts_with = "all")]
        form: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every verification suite; one line per criterion.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Accepted for symmetry with the other subcommands; the suite
        /// always covers the whole enumeration.
        #[arg(long)]
        all: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| minparab::Error::Io(e.to_string()))?;
        }
        Some(path) => {
            std::fs::write(path, text).map_err(|e| minparab::Error::Io(e.to_string()))?;
        }
    }
    Ok(())
}

fn vec_str(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Classify {
            max_rank,
            format,
            output,
        } => {
            let forms = enumerate_abelian_levi_forms(max_rank);
            let text = match format {
                Format::Json => {
                    let mut rows: Vec<serde_json::Value> = Vec::new();
                    for id in &forms {
                        let d = satake_of(id)?;
                        rows.push(serde_json::json!({
                            "form": id.to_string(),
                            "algebra": id.algebra_name(),
                            "case": format!("{:?}", id.case()),
                            "restricted_shape": restricted_shape(id),
                            "r_invariant": r_invariant(&d),
                            "m_abelian": is_m_abelian(&d),
                        }));
                    }
                    serde_json::to_string_pretty(&rows).unwrap() + "\n"
                }
                Format::Text => {
                    let mut s = format!(
                        "{:<16} {:<12} {:<10} {:<6} {:>4}  m-abelian\n",
                        "form", "algebra", "case", "shape", "r"
                    );
                    for id in &forms {
                        let d = satake_of(id)?;
                        s.push_str(&format!(
                            "{:<16} {:<12} {:<10} {:<6} {:>4}  {}\n",
                            id.to_string(),
                            id.algebra_name(),
                            format!("{:?}", id.case()),
                            restricted_shape(id),
                            r_invariant(&d),
                            is_m_abelian(&d)
                        ));
                    }
                    s
                }
                Format::Latex => {
                    let mut body = String::from(
                        "\\section*{Real forms with abelian Levi component}\n\\begin{tabular}{lllr}\nform & algebra & shape & $r(\\mathfrak g)$ \\\\\n\\hline\n",
                    );
                    for id in &forms {
                        let d = satake_of(id)?;
                        body.push_str(&format!(
                            "{} & {} & ${}$ & {} \\\\\n",
                            id.to_string().replace('_', "\\_"),
                            id.algebra_name().replace('_', "\\_"),
                            restricted_shape(id),
                            r_invariant(&d)
                        ));
                    }
                    body.push_str("\\end{tabular}\n");
                    latex_document(&body)
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Restrict {
            form,
            format,
            output,
        } => {
            let id = RealFormId::parse(&form)?;
            let rrs = restrict(&satake_of(&id)?)?;
            let text = match format {
                Format::Json => {
                    let roots: Vec<serde_json::Value> = rrs
                        .positive_roots()
                        .iter()
                        .map(|r| serde_json::json!({"coeffs": r.coeffs, "multiplicity": r.multiplicity}))
                        .collect();
                    serde_json::to_string_pretty(&serde_json::json!({
                        "form": id.to_string(),
                        "shape": restricted_shape(&id),
                        "restricted_rank": rrs.restricted_rank,
                        "reduced": rrs.reduced,
                        "dim_n": rrs.dim_n(),
                        "dim_m": rrs.dim_m(),
                        "positive_roots": roots,
                    }))
                    .unwrap()
                        + "\n"
                }
                _ => {
                    let mut s = format!(
                        "{}: restricted system of shape {} (rank {}, {})\n",
                        id,
                        restricted_shape(&id),
                        rrs.restricted_rank,
                        if rrs.reduced { "reduced" } else { "non-reduced" }
                    );
                    s.push_str(&format!(
                        "dim n = {}, dim m = {}, dim a = {}\n",
                        rrs.dim_n(),
                        rrs.dim_m(),
                        rrs.dim_a()
                    ));
                    for r in rrs.positive_roots() {
                        s.push_str(&format!("  {}  x{}\n", vec_str(&r.coeffs), r.multiplicity));
                    }
                    s
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cascade {
            form,
            format,
            output,
        } => {
            let id = RealFormId::parse(&form)?;
            let report = full_report(&id)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&serde_json::json!({
                        "form": report.real_form,
                        "cascade": report.cascade,
                        "modular": report.modular,
                    }))
                    .unwrap()
                        + "\n"
                }
                Format::Latex => latex_document(&latex_section(&report)),
                Format::Text => {
                    let mut s = format!("{}: m = {}\n", report.real_form, report.cascade.m);
                    for (i, b) in report.cascade.betas.iter().enumerate() {
                        s.push_str(&format!(
                            "  β_{} = {}  x{}\n",
                            i + 1,
                            vec_str(&b.coeffs),
                            b.multiplicity
                        ));
                    }
                    for (i, pairs) in report.cascade.layer_pairs.iter().enumerate() {
                        s.push_str(&format!(
                            "  layer {} (dim {}):",
                            i + 1,
                            report.cascade.layer_sizes[i]
                        ));
                        if pairs.is_empty() {
                            s.push_str(" center only\n");
                        } else {
                            s.push('\n');
                            for [a, b] in pairs {
                                s.push_str(&format!("    {} + {}\n", vec_str(a), vec_str(b)));
                            }
                        }
                    }
                    s.push_str(&format!(
                        "  d = {:?}, c = {}, exponents = {:?}, dp degree = {}\n",
                        report.cascade.d,
                        report.cascade.c,
                        report.modular.exponents,
                        report.modular.dp_degree
                    ));
                    s
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pfaffian {
            form,
            format,
            output,
        } => {
            let id = RealFormId::parse(&form)?;
            let report = full_report(&id)?;
            let Some(pf) = report.pfaffian else {
                return Err(minparab::Error::integrity(
                    "pfaffian",
                    format!("{id} is not split; layer Pfaffians are defined for split forms"),
                ));
            };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&pf).unwrap() + "\n",
                _ => {
                    let mut s = format!("{}: P(λ) = {}\n", id, pf.polynomial);
                    for (i, l) in pf.layers.iter().enumerate() {
                        s.push_str(&format!(
                            "  layer {}: β = {}, Pf = {}, degree {}\n",
                            i + 1,
                            vec_str(&l.beta),
                            l.pf,
                            l.degree
                        ));
                    }
                    s.push_str(&format!(
                        "  Pf² = det on every layer: {}\n",
                        pf.pf_squared_equals_det
                    ));
                    s
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Groups {
            group,
            all,
            format,
            output,
        } => {
            let mut picks: Vec<FiniteGroup> = Vec::new();
            if all || group.is_none() {
                for n in 3..=8 {
                    picks.push(dn_group(n)?);
                }
                for k in [4, 6, 7, 8] {
                    picks.push(w_group(k)?);
                }
            } else if let Some(spec) = group {
                if let Some(n) = spec.strip_prefix("dn:") {
                    picks.push(dn_group(n.parse().map_err(|_| {
                        minparab::Error::Group(format!("bad group spec '{spec}'"))
                    })?)?);
                } else if let Some(k) = spec.strip_prefix("w:") {
                    picks.push(w_group(k.parse().map_err(|_| {
                        minparab::Error::Group(format!("bad group spec '{spec}'"))
                    })?)?);
                } else {
                    return Err(minparab::Error::Group(format!(
                        "bad group spec '{spec}' (use dn:<n> or w:<k>)"
                    )));
                }
            }
            let mut rows = Vec::new();
            for g in &picks {
                let p = profile(g)?;
                rows.push((g.label.clone(), p, g.notes.clone()));
            }
            let text = match format {
                Format::Json => {
                    let arr: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(label, p, notes)| {
                            serde_json::json!({"label": label, "profile": p, "notes": notes})
                        })
                        .collect();
                    serde_json::to_string_pretty(&arr).unwrap() + "\n"
                }
                _ => {
                    let mut s = String::new();
                    for (label, p, notes) in &rows {
                        s.push_str(&format!(
                            "{label}: order {}, derived {}, center {}, classes {}, abelianization {:?}\n",
                            p.order, p.derived_order, p.center_order, p.class_count, p.abelianization
                        ));
                        let degs: Vec<String> = p
                            .degrees
                            .iter()
                            .map(|(d, k)| format!("{k}×deg{d}"))
                            .collect();
                        s.push_str(&format!("  irreducibles: {}\n", degs.join(", ")));
                        for n in notes {
                            s.push_str(&format!("  note: {n}\n"));
                        }
                        if label == "W_4" {
                            let v = verify_vector_rep_decomposition()?;
                            s.push_str(&format!(
                                "  C^8 splits into {} blocks, norms {:?}, orthogonal {}, distinct central characters {}\n",
                                v.blocks.len(), v.block_norms, v.pairwise_orthogonal, v.central_characters_distinct
                            ));
                        }
                        if label == "W_8" {
                            s.push_str(&format!(
                                "  printed generator recipe collapses to W_7: {}\n",
                                w8_recipe_collapses()?
                            ));
                        }
                    }
                    s
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            form,
            format,
            output,
        } => {
            let id = RealFormId::parse(&form)?;
            let report = full_report(&id)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
                Format::Latex => latex_document(&latex_section(&report)),
                Format::Text => {
                    let mut s = format!(
                        "{} ({}) — case {:?}, r = {}\n",
                        report.real_form,
                        report.classification.algebra,
                        report.classification.case,
                        report.classification.r_invariant
                    );
                    s.push_str(&format!(
                        "restricted: {} rank {}, dim n = {}, dim m = {}\n",
                        report.restricted_system.shape,
                        report.restricted_system.restricted_rank,
                        report.restricted_system.dim_n,
                        report.restricted_system.dim_m
                    ));
                    s.push_str(&format!(
                        "cascade: m = {}, layer dims {:?}, d = {:?}, c = {}\n",
                        report.cascade.m,
                        report.cascade.layer_sizes,
                        report.cascade.d,
                        report.cascade.c
                    ));
                    s.push_str(&format!(
                        "modular exponents {:?}, dp degree {}, quasi-center degree {}\n",
                        report.modular.exponents,
                        report.modular.dp_degree,
                        report.modular.quasi_center_degree
                    ));
                    if let Some(pf) = &report.pfaffian {
                        s.push_str(&format!("pfaffian: {}\n", pf.polynomial));
                    }
                    let orbits = match &report.orbits.orbit_count {
                        OrbitCount::SignOrbits { count } => format!("{count} sign orbits"),
                        OrbitCount::Single => "single orbit".into(),
                    };
                    s.push_str(&format!(
                        "stabilizers: dim a⋄ = {}, orbits: {orbits}, formula: {:?}\n",
                        report.stabilizers.dim_a_diamond, report.formula_shape
                    ));
                    s.push_str(&format!(
                        "M̃ = {} × {}{}\n",
                        report.m_structure.free_factor.display(),
                        report.m_structure.identity_component.display(),
                        if report.m_structure.tube_domain {
                            " (tube domain)"
                        } else {
                            ""
                        }
                    ));
                    for e in &report.errata {
                        s.push_str(&format!("erratum [{}]: {}\n", e.id, e.corrected));
                    }
                    s
                }
            };
            emit(&text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::AppendixDiff {
            form,
            all,
            format,
            output,
        } => {
            let ids: Vec<RealFormId> = match (&form, all) {
                (Some(f), false) => vec![RealFormId::parse(f)?],
                _ => enumerate_abelian_levi_forms(8)
                    .into_iter()
                    .filter(|id| fixture(id).is_ok())
                    .collect(),
            };
            let mut reports = Vec::new();
            for id in &ids {
                let fx = fixture(id)?;
                let rrs = restrict(&satake_of(id)?)?;
                let decomp = decompose(&rrs)?;
                reports.push(diff(&decomp, &fx));
            }
            let failed = reports.iter().any(|d| !d.clean());
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&reports).unwrap() + "\n",
                _ => {
                    let mut text = String::new();
                    let mut errata_seen: Vec<String> = Vec::new();
                    for d in &reports {
                        if d.clean() {
                            text.push_str(&format!(
                                "ok   {:<16} {} β matched, {} pairs matched, {} corrected entries\n",
                                d.form, d.matched_betas, d.matched_pairs, d.corrected_entries
                            ));
                        } else {
                            text.push_str(&format!("FAIL {:<16}\n", d.form));
                            for m in &d.genuine_mismatches {
                                text.push_str(&format!("     {m}\n"));
                            }
                        }
                        errata_seen.extend(d.errata.iter().map(|e| e.id.clone()));
                    }
                    errata_seen.sort();
                    errata_seen.dedup();
                    text.push_str(&format!("errata: {}\n", errata_seen.join(", ")));
                    text
                }
            };
            emit(&text, &output)?;
            Ok(if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Verify {
            max_rank,
            all: _,
            output,
        } => {
            let (text, ok) = run_verify(max_rank)?;
            emit(&text, &output)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}

/// The aggregate verification suite; one pass/fail line per criterion.
fn run_verify(max_rank: usize) -> Result<(String, bool)> {
    let mut out = String::new();
    let mut all_ok = true;
    let record = |all_ok: &mut bool, name: &str, ok: bool, detail: String| -> String {
        *all_ok &= ok;
        let tag = if ok { "ok  " } else { "FAIL" };
        if detail.is_empty() {
            format!("{tag} {name}\n")
        } else {
            format!("{tag} {name}: {detail}\n")
        }
    };

    let forms = enumerate_abelian_levi_forms(max_rank);

    // 1. classification and the abelian-Levi criterion
    {
        let mut ok = true;
        for id in &forms {
            ok &= is_m_abelian(&satake_of(id)?);
        }
        use minparab::root::CartanType;
        use minparab::satake::{NodeColor, SatakeDiagram};
        let controls = [
            SatakeDiagram::assemble(
                vec![CartanType::new(Series::A, 3)?],
                vec![NodeColor::White, NodeColor::Black, NodeColor::White],
                vec![2, 1, 0],
            )?,
            SatakeDiagram::assemble(
                vec![CartanType::new(Series::B, 3)?],
                vec![NodeColor::White, NodeColor::Black, NodeColor::Black],
                vec![0, 1, 2],
            )?,
        ];
        for c in &controls {
            ok &= !is_m_abelian(c);
            ok &= restrict(c).is_err();
        }
        let line = record(
            &mut all_ok,
            "classification",
            ok,
            format!("{} forms, black-dotted controls rejected", forms.len()),
        );
        out.push_str(&line);
    }

    // 2. r-invariant against the case formulas
    {
        let mut ok = true;
        for id in &forms {
            let r = r_invariant(&satake_of(id)?);
            let expected = match id {
                RealFormId::Split(t) => t.rank,
                RealFormId::Complex(_) | RealFormId::SuNearly { .. } => 0,
                RealFormId::SuEqual { .. } => 1,
                RealFormId::SoNearly { l } => l - 2,
                RealFormId::E6Quasi => 2,
            };
            ok &= r == expected;
        }
        let line = record(&mut all_ok, "r-invariant", ok, String::new());
        out.push_str(&line);
    }

    // 3. appendix regeneration with closed errata list
    {
        let mut ok = true;
        let mut errata: Vec<String> = Vec::new();
        for id in forms.iter().filter(|id| fixture(id).is_ok()) {
            let fx = fixture(id)?;
            let rrs = restrict(&satake_of(id)?)?;
            let d = diff(&decompose(&rrs)?, &fx);
            ok &= d.clean();
            errata.extend(d.errata.iter().map(|e| e.id.clone()));
        }
        errata.sort();
        errata.dedup();
        ok &= errata == ["e6-s1-first-pair", "e6-s2-grouping", "f4-beta1-tail"];
        let line = record(
            &mut all_ok,
            "appendix-regeneration",
            ok,
            format!("errata [{}]", errata.join(", ")),
        );
        out.push_str(&line);
    }

    // 4. counting identities
    {
        let mut ok = true;
        for id in &forms {
            let rrs = restrict(&satake_of(id)?)?;
            let d = decompose(&rrs)?;
            ok &= d.dim_n == rrs.dim_n();
            let count: usize = d.layers.iter().map(|l| l.len() + 1).sum();
            ok &= count == rrs.positive_roots().len();
        }
        let e7 = decompose(&restrict(&satake_of(&RealFormId::parse("split:E7")?)?)?)?;
        ok &= e7.dim_l == vec![33, 17, 1, 9, 1, 1, 1];
        let e8 = decompose(&restrict(&satake_of(&RealFormId::parse("split:E8")?)?)?)?;
        ok &= e8.dim_l == vec![57, 33, 17, 1, 9, 1, 1, 1];
        let line = record(&mut all_ok, "counting-identities", ok, String::new());
        out.push_str(&line);
    }

    // 5. layer definitions agree
    {
        let mut ok = true;
        for id in &forms {
            let rrs = restrict(&satake_of(id)?)?;
            let betas = minparab::cascade::cascade_roots(&rrs)?;
            ok &= layers(&rrs, &betas) == layers_alt(&rrs, &betas);
        }
        let line = record(&mut all_ok, "layer-equivalence", ok, String::new());
        out.push_str(&line);
    }

    // 6. modular identity and integral exponents
    {
        let mut ok = true;
        for id in &forms {
            let rrs = restrict(&satake_of(id)?)?;
            let d = decompose(&rrs)?;
            let mw = modular_weights(&d)?;
            ok &= mw.identity_ok;
            ok &= verify_setup(&d, &rrs).passed();
        }
        let g2 = decompose(&restrict(&satake_of(&RealFormId::parse("split:G2")?)?)?)?;
        ok &= modular_weights(&g2)?.exponents == vec![3, 1];
        let line = record(&mut all_ok, "modular-identity", ok, String::new());
        out.push_str(&line);
    }

    // 7. Pfaffians on split forms, with the Jacobi oracle behind them
    {
        let mut ok = true;
        for id in &forms {
            let RealFormId::Split(t) = id else { continue };
            let sys = RootSystem::new(*t)?;
            let table = structure_constants(&sys);
            verify_jacobi(&table, &sys)?;
            let rrs = restrict(&satake_of(id)?)?;
            let d = decompose(&rrs)?;
            let pf = pfaffian(&d, &table)?;
            for (r, l) in pf.layers.iter().enumerate() {
                ok &= l.degree == d.d[r];
                let det = bareiss_det(&layer_matrix(&d, &table, r));
                ok &= &l.pf * &l.pf == det;
            }
            if t.series == Series::G {
                ok &= d.c.to_string() == "8";
            }
        }
        let line = record(&mut all_ok, "pfaffian", ok, String::new());
        out.push_str(&line);
    }

    // 8. finite group profiles
    {
        let mut ok = true;
        for n in 3..=8 {
            let p = profile(&dn_group(n)?)?;
            ok &= p.order == 1 << n && p.derived_order == 2;
            ok &= p.linear_count() == 1 << (n - 1);
            if n % 2 == 0 {
                ok &= p.degrees.get(&(1 << (n / 2 - 1))) == Some(&2);
            } else {
                ok &= p.degrees.get(&(1 << (n / 2))) == Some(&1);
            }
        }
        for (k, order, ab) in [(4usize, 32usize, 4usize), (6, 128, 6), (7, 256, 7), (8, 512, 8)] {
            let p = profile(&w_group(k)?)?;
            ok &= p.order == order && p.derived_order == 2;
            ok &= p.abelianization == vec![2; ab];
        }
        let v = verify_vector_rep_decomposition()?;
        ok &= v.blocks.len() == 4
            && v.block_norms.iter().all(|&n| n == 1)
            && v.pairwise_orthogonal
            && v.central_characters_distinct;
        // Natural representations: w_6 and w_8 irreducible self-dual, w_7
        // irreducible with an inequivalent dual.
        ok &= natural_character_data(&w_group(6)?)? == (1, 1);
        ok &= natural_character_data(&w_group(7)?)? == (1, 0);
        ok &= natural_character_data(&w_group(8)?)? == (1, 1);
        for n in 3..=8 {
            ok &= dn_vector_image_order(&dn_group(n)?)? == 1 << (n - 1);
        }
        ok &= w8_recipe_collapses()?;
        let line = record(
            &mut all_ok,
            "finite-groups",
            ok,
            "W_8 printed recipe collapse reported".into(),
        );
        out.push_str(&line);
    }

    // 9. orbit and stabilizer data
    {
        let mut ok = true;
        for id in &forms {
            let report = full_report(id)?;
            match (id.case(), &report.orbits.orbit_count) {
                (CaseTag::Complex, OrbitCount::Single) => {}
                (CaseTag::Complex, _) => ok = false,
                (_, OrbitCount::SignOrbits { count }) => {
                    ok &= *count == 1u64 << report.cascade.m;
                }
                _ => ok = false,
            }
            ok &= report.stabilizers.dim_a_diamond
                == report.stabilizers.dim_a - report.stabilizers.m;
            ok &= (report.cascade.dim_n + report.cascade.dim_s) % 2 == 0;
        }
        let line = record(&mut all_ok, "orbit-stabilizer", ok, String::new());
        out.push_str(&line);
    }

    Ok((out, all_ok))
}

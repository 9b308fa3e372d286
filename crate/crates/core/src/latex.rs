//! LaTeX rendering of per-form reports: a section per real form with the
//! cascade tables laid out like the reference appendix, plus the inversion
//! formula template with the computed parameters substituted.

use crate::report::{FormulaShape, OrbitCount, ParabolicReport};

/// ψ-combination like `2\psi_1+3\psi_2`; `0` for the zero vector.
fn psi_comb(v: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(format!("\\psi_{{{}}}", i + 1)),
            c => parts.push(format!("{c}\\psi_{{{}}}", i + 1)),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn escape(s: &str) -> String {
    s.replace('^', "\\^{}").replace('_', "\\_")
}

/// One `\section` for a report.
pub fn latex_section(r: &ParabolicReport) -> String {
    let mut out = String::new();
    let title = escape(&r.real_form);
    out.push_str(&format!("\\section*{{{title} \\quad ({})}}\n", escape(&r.classification.algebra)));
    out.push_str(&format!(
        "Restricted system of shape ${}$, rank {}, {}; $r(\\mathfrak g) = {}$, $\\dim\\mathfrak n = {}$, $\\dim\\mathfrak m = {}$.\n\n",
        r.restricted_system.shape,
        r.restricted_system.restricted_rank,
        if r.restricted_system.reduced { "reduced" } else { "non-reduced" },
        r.classification.r_invariant,
        r.restricted_system.dim_n,
        r.restricted_system.dim_m,
    ));

    out.push_str("\\paragraph{Cascade.}\n\\begin{itemize}\n");
    for (i, b) in r.cascade.betas.iter().enumerate() {
        out.push_str(&format!(
            "\\item $\\beta_{{{}}} = {}$ (multiplicity {})\n",
            i + 1,
            psi_comb(&b.coeffs),
            b.multiplicity
        ));
    }
    out.push_str("\\end{itemize}\n");

    for (i, pairs) in r.cascade.layer_pairs.iter().enumerate() {
        if pairs.is_empty() {
            out.push_str(&format!("$S_{{{}}} = \\emptyset$.\\quad\n", i + 1));
            continue;
        }
        out.push_str(&format!("\\par\\noindent $S_{{{}}}$:\n\\begin{{align*}}\n", i + 1));
        for [a, b] in pairs {
            out.push_str(&format!("&({},\\; {})\\\\\n", psi_comb(a), psi_comb(b)));
        }
        out.push_str("\\end{align*}\n");
    }

    out.push_str(&format!(
        "\\paragraph{{Constants.}} $d = ({})$, $c = {}$, modular exponents $({})$, operator degree ${}$, quasi-center degree ${}$.\n",
        r.cascade
            .d
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        r.cascade.c,
        r.modular
            .exponents
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        r.modular.dp_degree,
        r.modular.quasi_center_degree,
    ));

    if let Some(pf) = &r.pfaffian {
        out.push_str(&format!(
            "\\paragraph{{Pfaffian.}} $P(\\lambda) = {}$.\n",
            pf.layers
                .iter()
                .enumerate()
                .map(|(i, l)| format!("{}\\,\\lambda_{{{}}}^{{{}}}", l.pf, i + 1, l.degree))
                .collect::<Vec<_>>()
                .join(" \\cdot ")
        ));
    }

    out.push_str(&format!(
        "\\paragraph{{Component group.}} $\\widetilde F \\cong {}$, identity component ${}${}.\n",
        escape(&r.m_structure.free_factor.display()),
        escape(&r.m_structure.identity_component.display()),
        if r.m_structure.tube_domain { ", tube domain" } else { "" },
    ));

    let orbit_text = match &r.orbits.orbit_count {
        OrbitCount::SignOrbits { count } => format!("$2^m = {count}$ sign orbits"),
        OrbitCount::Single => "a single orbit".into(),
    };
    out.push_str(&format!("\\paragraph{{Orbits.}} {orbit_text} on the generic parameter space.\n"));

    out.push_str("\\paragraph{Inversion formula.}\n");
    match r.formula_shape {
        FormulaShape::SumOverSignOrbits => out.push_str(
            "\\[ f(x) = c\\int_{\\chi\\in\\widehat M}\\Big(\\int_{\\alpha\\in\\mathfrak a_\\diamond^*}\\ \\sum_{\\varepsilon}\\Big(\\int_{\\lambda\\in\\mathcal O_\\varepsilon} \\Theta_{\\pi_{\\chi,\\alpha,\\lambda}}(D(r(x)f))\\,|\\mathrm{Pf}(\\lambda)|\\,d\\lambda\\Big)d\\alpha\\Big)\\deg(\\chi)\\,d\\chi \\]\n",
        ),
        FormulaShape::SingleOrbitWithCharacterSum => out.push_str(
            "\\[ f(x) = c\\sum_{\\chi\\in\\widehat{M_\\diamond}}\\Big(\\int_{\\alpha\\in\\mathfrak a_\\diamond^*}\\Big(\\int_{\\lambda\\in\\mathfrak t^*} \\Theta_{\\pi_{\\chi,\\alpha,\\lambda}}(D(r(x)f))\\,|\\mathrm{Pf}(\\lambda)|\\,d\\lambda\\Big)d\\alpha\\Big) \\]\n",
        ),
    }

    if !r.errata.is_empty() {
        out.push_str("\\paragraph{Errata.}\n\\begin{itemize}\n");
        for e in &r.errata {
            out.push_str(&format!("\\item {}: {}\n", escape(&e.id), escape(&e.corrected)));
        }
        out.push_str("\\end{itemize}\n");
    }
    out
}

/// Wrap sections into a standalone compilable document.
pub fn latex_document(body: &str) -> String {
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath,amssymb}}\n\\setlength{{\\parindent}}{{0pt}}\n\\begin{{document}}\n{body}\\end{{document}}\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::full_report;
    use crate::satake::RealFormId;

    #[test]
    fn renders_balanced_environments() {
        for id in ["split:G2", "complex:C2", "su(2,3)"] {
            let r = full_report(&RealFormId::parse(id).unwrap()).unwrap();
            let body = latex_section(&r);
            let doc = latex_document(&body);
            assert_eq!(
                doc.matches("\\begin{align*}").count(),
                doc.matches("\\end{align*}").count()
            );
            assert_eq!(
                doc.matches("\\begin{itemize}").count(),
                doc.matches("\\end{itemize}").count()
            );
            assert!(doc.starts_with("\\documentclass"));
            assert!(doc.ends_with("\\end{document}\n"));
        }
    }

    #[test]
    fn psi_comb_rendering() {
        assert_eq!(psi_comb(&[3, 2]), "3\\psi_{1}+2\\psi_{2}");
        assert_eq!(psi_comb(&[0, 1]), "\\psi_{2}");
        assert_eq!(psi_comb(&[0, 0]), "0");
    }
}

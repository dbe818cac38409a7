//! `export`: re-emit a certificate as JSON, Graphviz DOT, or CSV.
//!
//! JSON output is byte-identical to what `construct` wrote (the certificate
//! encoding is canonical), so `export --format json` doubles as a parse
//! check. DOT and CSV are lossy views for plotting and spreadsheets.

use std::fmt::Write as _;
use std::path::PathBuf;

use antimagic_core::TotalLabeling;

use crate::commands::{read_certificate, write_output, ExportFormat};
use crate::CliError;

pub struct ExportOptions {
    pub path: PathBuf,
    pub format: ExportFormat,
    pub output: Option<PathBuf>,
}

pub fn cmd_export(opts: &ExportOptions) -> Result<(), CliError> {
    let certificate = read_certificate(&opts.path)?;
    let rendered = match opts.format {
        ExportFormat::Json => certificate.to_json(),
        ExportFormat::Dot | ExportFormat::Csv => {
            let labeling = certificate
                .to_labeling()
                .map_err(|e| CliError::Runtime(format!("{}: {e}", opts.path.display())))?;
            match opts.format {
                ExportFormat::Dot => render_dot(&labeling),
                ExportFormat::Csv => render_csv(&labeling),
                ExportFormat::Json => unreachable!(),
            }
        }
    };
    write_output(opts.output.as_deref(), &rendered)
}

fn render_dot(labeling: &TotalLabeling) -> String {
    let graph = labeling.graph();
    let mut out = String::new();
    let _ = writeln!(out, "graph antimagic {{");
    let _ = writeln!(out, "  label=\"{graph}\";");
    let _ = writeln!(out, "  node [shape=circle];");
    for vertex in graph.vertices() {
        let label = labeling.vertex_label(vertex).expect("vertex is in graph");
        let weight = labeling.vertex_weight(vertex).expect("vertex is in graph");
        let _ = writeln!(
            out,
            "  \"{vertex}\" [label=\"{vertex}\\nf={label}\\nwt={weight}\"];"
        );
    }
    for edge in graph.edges() {
        let label = labeling.edge_label(*edge).expect("edge is in graph");
        let weight = labeling.edge_weight(*edge).expect("edge is in graph");
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"f={label}\\nwt={weight}\"];",
            edge.a(),
            edge.b()
        );
    }
    let _ = writeln!(out, "}}");
    out
}

fn render_csv(labeling: &TotalLabeling) -> String {
    let graph = labeling.graph();
    let mut out = String::from("element,label,weight\n");
    for vertex in graph.vertices() {
        let label = labeling.vertex_label(vertex).expect("vertex is in graph");
        let weight = labeling.vertex_weight(vertex).expect("vertex is in graph");
        let _ = writeln!(out, "{vertex},{label},{weight}");
    }
    for edge in graph.edges() {
        let label = labeling.edge_label(*edge).expect("edge is in graph");
        let weight = labeling.edge_weight(*edge).expect("edge is in graph");
        let _ = writeln!(out, "{edge},{label},{weight}");
    }
    out
}

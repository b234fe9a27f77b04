use std::io::Write;
use std::str::FromStr;

use super::{GraphError, MonomialDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    /// One `x1,x2 -> y1,y2` line per arc, sorted by `(tail id, head id)`.
    #[default]
    ArcsText,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "arcs-text" => Ok(ExportFormat::ArcsText),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(format!("unknown export format `{other}`")),
        }
    }
}

impl MonomialDigraph {
    /// Writes the digraph in the requested format. Output is ASCII with LF
    /// line endings and depends only on the parameters.
    pub fn export<W: Write>(&self, format: ExportFormat, mut out: W) -> Result<(), GraphError> {
        let g = self.graph();
        match format {
            ExportFormat::ArcsText => {
                for (u, v) in g.arcs() {
                    let (x1, x2) = self.coords(u);
                    let (y1, y2) = self.coords(v);
                    writeln!(out, "{x1},{x2} -> {y1},{y2}")?;
                }
            }
            ExportFormat::Dot => {
                let p = self.params();
                writeln!(out, "digraph \"D({};{},{})\" {{", p.q, p.m, p.n)?;
                for v in g.vertices() {
                    let (x1, x2) = self.coords(v);
                    writeln!(out, "  {v} [label=\"({x1},{x2})\"];")?;
                }
                for (u, v) in g.arcs() {
                    writeln!(out, "  {u} -> {v};")?;
                }
                writeln!(out, "}}")?;
            }
        }
        out.flush()?;
        Ok(())
    }

    pub fn export_string(&self, format: ExportFormat) -> String {
        let mut buf = Vec::new();
        self.export(format, &mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("export output is ASCII")
    }
}

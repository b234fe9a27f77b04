// The digraph D(3; 1, 2): arcs, strong components, diameter, DOT export.
//
// cargo run --example d312_digraph > d312.dot

use monodigraph::digraph::{
    diameter, strong_components, ExportFormat, MonomialDigraph, MonomialParams,
};

pub fn main() {
    let d = MonomialDigraph::from_params(MonomialParams::new(3, 1, 2).unwrap()).unwrap();
    let g = d.graph();
    eprintln!(
        "{}: {} vertices, {} arcs, {} loops",
        d.params(),
        g.vertex_count(),
        g.arc_count(),
        g.loops().count()
    );
    for (u, v) in g.arcs() {
        let ((x1, x2), (y1, y2)) = (d.coords(u), d.coords(v));
        eprintln!("  ({x1},{x2}) -> ({y1},{y2})");
    }
    eprintln!("strong components: {}", strong_components(g).len());
    eprintln!("diameter: {:?}", diameter(g, false));
    print!("{}", d.export_string(ExportFormat::Dot));
}

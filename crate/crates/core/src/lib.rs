pub mod connectivity;
pub mod digraph_finder;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph_finder;
pub mod harness;
pub mod oracle;
pub mod shapes;

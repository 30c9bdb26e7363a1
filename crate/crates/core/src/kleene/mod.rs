//! Regular languages from automata, by colimits in categories enriched in
//! languages.
//!
//! An automaton is a labelled graph with input and output states. Labelling
//! edges by singleton languages ([`phi1`]), taking the free language
//! category on the result ([`phi2`]) and keeping only the input and output
//! states ([`phi3`]) gives a regular expression for each pair of designated
//! states. Gluing automata corresponds to [`lang_compose`], which only ever
//! identifies two objects at a time.

mod graph;
mod lang;
mod oracle;
mod regex;

pub use graph::{compose_graphs, phi1, Automaton, Label, LabelledGraph, RegexGraph};
pub use lang::{
    identify_objects, kleene_pipeline, lang_compose, matrix_star, phi2, phi3, Corelation, Identified,
    KleeneTable, LangCat, LangCospan,
};
pub use oracle::{
    automaton_language, bounded_counterexample, bounded_equiv, regex_bounded_eq, RegexOracle, Words,
};
pub use regex::{is_valid_letter, parse_regex, Regex};

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(reduced_words, "reduced_words.rs");
example!(word_graph, "word_graph.rs");
example!(staircase_graph, "staircase_graph.rs");
example!(chromatic, "chromatic.rs");
example!(colour_separation, "colour_separation.rs");
example!(partition_identities, "partition_identities.rs");
example!(groebner_hilbert, "groebner_hilbert.rs");
example!(conjectures, "conjectures.rs");
example!(cartoon, "cartoon.rs");
example!(generating_functions, "generating_functions.rs");
example!(command_line, "command_line.rs");

#[test]
fn reduced_words_example_runs() {
    reduced_words::run_example().expect("reduced words example should run");
}

#[test]
fn word_graph_example_runs() {
    word_graph::run_example().expect("word graph example should run");
}

#[test]
fn staircase_graph_example_runs() {
    staircase_graph::run_example().expect("staircase graph example should run");
}

#[test]
fn chromatic_example_runs() {
    chromatic::run_example().expect("chromatic example should run");
}

#[test]
fn colour_separation_example_runs() {
    colour_separation::run_example().expect("colour separation example should run");
}

#[test]
fn partition_identities_example_runs() {
    partition_identities::run_example().expect("partition identities example should run");
}

#[test]
fn groebner_hilbert_example_runs() {
    groebner_hilbert::run_example().expect("groebner example should run");
}

#[test]
fn conjectures_example_runs() {
    conjectures::run_example().expect("conjectures example should run");
}

#[test]
fn cartoon_example_runs() {
    cartoon::run_example().expect("cartoon example should run");
}

#[test]
fn generating_functions_example_runs() {
    generating_functions::run_example().expect("generating functions example should run");
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command line example should run");
}

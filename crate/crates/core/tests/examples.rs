macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(character_table, character_table_runs, "character_table.rs");
example!(derangement_spectrum, derangement_spectrum_runs, "derangement_spectrum.rs");
example!(hoffman_bounds, hoffman_bounds_runs, "hoffman_bounds.rs");
example!(weight_solver, weight_solver_runs, "weight_solver.rs");
example!(extremal_families, extremal_families_runs, "extremal_families.rs");
example!(clique_search, clique_search_runs, "clique_search.rs");
example!(isotypic_projection, isotypic_projection_runs, "isotypic_projection.rs");
example!(alternating_group, alternating_group_runs, "alternating_group.rs");
example!(maurey_neighborhoods, maurey_neighborhoods_runs, "maurey_neighborhoods.rs");
example!(acceptance_suite, acceptance_suite_runs, "acceptance_suite.rs");

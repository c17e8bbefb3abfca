mod matching_statistics_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matching_statistics.rs"));
}

#[test]
fn matching_statistics_example_runs() {
    matching_statistics_example::run_example().expect("matching_statistics example should run");
}

mod tree_levels_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tree_levels.rs"));
}

#[test]
fn tree_levels_example_runs() {
    tree_levels_example::run_example().expect("tree_levels example should run");
}

mod group_sequences_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/group_sequences.rs"));
}

#[test]
fn group_sequences_example_runs() {
    group_sequences_example::run_example().expect("group_sequences example should run");
}

mod similarity_classes_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/similarity_classes.rs"));
}

#[test]
fn similarity_classes_example_runs() {
    similarity_classes_example::run_example().expect("similarity_classes example should run");
}

mod dyck_tunnels_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dyck_tunnels.rs"));
}

#[test]
fn dyck_tunnels_example_runs() {
    dyck_tunnels_example::run_example().expect("dyck_tunnels example should run");
}

mod width_transforms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/width_transforms.rs"));
}

#[test]
fn width_transforms_example_runs() {
    width_transforms_example::run_example().expect("width_transforms example should run");
}

mod custom_group_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_group.rs"));
}

#[test]
fn custom_group_example_runs() {
    custom_group_example::run_example().expect("custom_group example should run");
}

mod verify_identities_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_identities.rs"));
}

#[test]
fn verify_identities_example_runs() {
    verify_identities_example::run_example().expect("verify_identities example should run");
}

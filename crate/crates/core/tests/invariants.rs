use revtier::verify::{run, Suite};

fn suite_passes(suite: Suite) {
    let report = run(suite, 9).unwrap();
    assert!(report.passed(), "{}", report.to_text());
}

#[test]
fn permcore() {
    suite_passes(Suite::Permcore);
}

#[test]
fn sorter() {
    suite_passes(Suite::Sorter);
}

#[test]
fn pairs() {
    suite_passes(Suite::Pairs);
}

#[test]
fn tables() {
    suite_passes(Suite::Tables);
}

#[test]
fn basis() {
    suite_passes(Suite::Basis);
}

#[test]
fn entringer() {
    suite_passes(Suite::Entringer);
}

#[test]
fn series() {
    suite_passes(Suite::Series);
}

use contactgrad::classify::{verify_table, Status, TableReport};

fn check(id: &str) -> TableReport {
    let r = verify_table(id).expect("known table");
    print!("{}", r.to_markdown());
    for row in &r.rows {
        assert_ne!(row.status, Status::Mismatch, "table {id}, {}: {} vs {}", row.key, row.computed, row.expected);
        if row.status == Status::DataOnly {
            assert!(row.reason.is_some(), "data-only row without reason: {}", row.key);
        }
    }
    assert!(!r.rows.is_empty());
    r
}

#[test]
fn table_ov() {
    let r = check("ov");
    assert_eq!(r.count(Status::Match), 10);
}

#[test]
fn table_1() {
    check("1");
}

#[test]
fn table_2() {
    check("2");
}

#[test]
fn table_3() {
    check("3");
}

#[test]
fn table_4() {
    check("4");
}

#[test]
fn tables_5_to_8() {
    for id in ["5", "6", "7", "8"] {
        check(id);
    }
}

#[test]
fn table_9() {
    check("9");
}

#[test]
fn table_11() {
    check("11");
}

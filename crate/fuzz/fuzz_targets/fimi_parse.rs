//! Fuzz the transaction-format parser: arbitrary bytes must either fail
//! with a parse/read error or yield a canonical database that survives a
//! render → reparse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use ramp::dataset::parse_transactions;

fuzz_target!(|data: &[u8]| {
    let Ok(db) = parse_transactions(data) else {
        return;
    };

    let mut rendered = String::new();
    for t in db.transactions() {
        assert!(!t.is_empty(), "parser never yields empty transactions");
        assert!(
            t.windows(2).all(|w| w[0] < w[1]),
            "transactions are strictly ascending"
        );
        let strs: Vec<String> = t.iter().map(|i| i.to_string()).collect();
        rendered.push_str(&strs.join(" "));
        rendered.push('\n');
    }
    if let Some(&max) = db.transactions().iter().flatten().max() {
        assert_eq!(db.item_universe(), max as usize + 1);
    } else {
        assert_eq!(db.item_universe(), 0);
    }

    let reparsed = parse_transactions(rendered.as_bytes()).expect("canonical text reparses");
    assert_eq!(&db, &reparsed, "parse is a retraction of render");
});

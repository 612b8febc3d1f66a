//! The text formats shared by the command line and the fixtures.

use genroof::io::{parse, read_file, write_qpbf};
use genroof::card::fixture_dir;

fn main() {
    let q = parse("qpbf 3\nu 1 0 1/2\ne 1 2 0 1 1 0\ne 2 3 2 0 0 2\n").unwrap();
    print!("{}", q.write());
    if let genroof::io::FunctionFile::Qpbf(q) = &q {
        println!("table:\n{}", genroof::io::write_pbf(&q.to_table()));
        assert_eq!(parse(&write_qpbf(q)).unwrap(), genroof::io::FunctionFile::Qpbf(q.clone()));
    }
    let fig = read_file(&fixture_dir().join("fig1b.card")).unwrap();
    print!("{}", fig.write());
    match parse("pbf 2\n00 0\n01 1\n11 0\n") {
        Err(e) => println!("incomplete table: {e}"),
        Ok(_) => unreachable!(),
    }
}

//! Parse operator expressions and print them in normal order (`q` left of `p`).
//!
//! `cargo run --example normalize -- "p^2*q" "t[1,1;s]"`

use weyl_cartan::weyl::parse::parse_operator;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if args.is_empty() {
        vec!["p*q".to_string(), "p^2*q^2".into(), "x^2".into(), "t[1,1;s]".into(), "t[2,1;0] - t[2,1;1]".into()]
    } else {
        args
    };
    for e in exprs {
        match parse_operator(&e) {
            Ok(op) => println!("{e:>24}  =  {op}"),
            Err(err) => {
                eprintln!("{e}: {err}");
                std::process::exit(2);
            }
        }
    }
}

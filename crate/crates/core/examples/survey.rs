//! Prints the verdict of every builtin identity on every catalog algebra.

use std::time::Instant;

use maltsev::catalog::builtin;
use maltsev::checker::{check_builtin, BuiltinIdentity};

fn main() {
    for name in ["abelian(3)", "so3", "sl2", "m7", "nc3"] {
        let a = builtin(name).unwrap();
        for id in BuiltinIdentity::ALL {
            let t = Instant::now();
            let r = check_builtin(&a, id).unwrap();
            println!(
                "{name:<11} {:<24} {:<5} {:>6} substitutions  {:?}",
                id.id(),
                if r.holds { "holds" } else { "FAILS" },
                r.substitutions_checked,
                t.elapsed()
            );
        }
    }
}

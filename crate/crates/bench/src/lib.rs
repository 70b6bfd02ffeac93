//! Fixed instances shared by the benchmarks.

use qpade_core::arith::rat::int;
use qpade_core::systems::e7_close_constraint;
use qpade_core::Params;

/// One representative pack per type at the given degrees.
pub fn instances(m: u32, n: u32) -> Vec<Params> {
    vec![
        e7_close_constraint(&int(2), &int(3), &int(5), &int(7), &int(11), &int(13), m, n).expect("nonzero b1 b2"),
        Params::e6(int(2), [int(3), int(5)], [int(7), int(11)], m, n),
        Params::d5(int(2), int(3), int(5), int(7), m, n),
        Params::a4(int(2), int(5), int(7), m, n),
        Params::a2a1(int(2), int(3), m, n),
    ]
}

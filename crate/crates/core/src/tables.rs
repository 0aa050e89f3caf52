//! Embedded data for the exceptional types.
//!
//! Labels are `(d, e)` pairs: `d` is the degree of the Weyl group character
//! and `e` its `b`-invariant, with an optional prime mark where two
//! characters share the same pair.

use crate::labels::Prime;
use crate::weyl::Family;

type Lab = (u32, u32, Prime);

const N: Prime = Prime::None;
const P: Prime = Prime::Prime;
const PP: Prime = Prime::DoublePrime;

pub(crate) static G2_LABELS: &[Lab] = &[
    (1, 0, N),
    (1, 6, N),
    (1, 3, P),
    (1, 3, PP),
    (2, 1, N),
    (2, 2, N),
];

pub(crate) static F4_LABELS: &[Lab] = &[
    (1, 0, N),
    (1, 12, PP),
    (1, 12, P),
    (1, 24, N),
    (2, 4, PP),
    (2, 16, P),
    (2, 4, P),
    (2, 16, PP),
    (4, 8, N),
    (9, 2, N),
    (9, 6, PP),
    (9, 6, P),
    (9, 10, N),
    (6, 6, P),
    (6, 6, PP),
    (12, 4, N),
    (4, 1, N),
    (4, 7, PP),
    (4, 7, P),
    (4, 13, N),
    (8, 3, PP),
    (8, 9, P),
    (8, 3, P),
    (8, 9, PP),
    (16, 5, N),
];

macro_rules! plain {
    ($($d:literal, $e:literal);* $(;)?) => { &[$(($d, $e, Prime::None)),*] };
}

pub(crate) static E6_LABELS: &[Lab] = plain![
    1, 0; 1, 36; 10, 9; 6, 1; 6, 25; 20, 10; 15, 5; 15, 17; 15, 4; 15, 16;
    20, 2; 20, 20; 24, 6; 24, 12; 30, 3; 30, 15; 60, 8; 80, 7; 90, 8;
    60, 5; 60, 11; 64, 4; 64, 13; 81, 6; 81, 10;
];

pub(crate) static E7_LABELS: &[Lab] = plain![
    1, 0; 1, 63; 7, 46; 7, 1; 15, 28; 15, 7; 21, 6; 21, 33; 21, 36; 21, 3;
    27, 2; 27, 37; 35, 22; 35, 13; 35, 31; 35, 4; 56, 30; 56, 3; 70, 18; 70, 9;
    84, 12; 84, 15; 105, 26; 105, 5; 105, 6; 105, 21; 105, 12; 105, 15;
    120, 4; 120, 25; 168, 6; 168, 21; 189, 10; 189, 17; 189, 22; 189, 5;
    189, 20; 189, 7; 210, 6; 210, 21; 210, 10; 210, 13; 216, 16; 216, 9;
    280, 18; 280, 9; 280, 8; 280, 17; 315, 16; 315, 7; 336, 14; 336, 11;
    378, 14; 378, 9; 405, 8; 405, 15; 420, 10; 420, 13; 512, 12; 512, 11;
];

pub(crate) static E8_LABELS: &[Lab] = plain![
    1, 0; 1, 120; 28, 8; 28, 68; 35, 2; 35, 74; 70, 32; 50, 8; 50, 56;
    84, 4; 84, 64; 168, 24; 175, 12; 175, 36; 210, 4; 210, 52; 420, 20;
    300, 8; 300, 44; 350, 14; 350, 38; 525, 12; 525, 36; 567, 6; 567, 46;
    1134, 20; 700, 16; 700, 28; 700, 6; 700, 42; 1400, 20; 840, 14; 840, 26;
    1680, 22; 972, 12; 972, 32; 1050, 10; 1050, 34; 2100, 20; 1344, 8;
    1344, 38; 2688, 20; 1400, 8; 1400, 32; 1575, 10; 1575, 34; 3150, 18;
    2100, 16; 2100, 28; 4200, 18; 2240, 10; 2240, 28; 4480, 16; 2268, 10;
    2268, 30; 4536, 18; 2835, 14; 2835, 22; 5670, 18; 3200, 16; 3200, 22;
    4096, 12; 4096, 26; 4200, 12; 4200, 24; 6075, 14; 6075, 22;
    8, 1; 8, 91; 56, 19; 56, 49; 112, 3; 112, 63; 160, 7; 160, 55;
    448, 9; 448, 39; 400, 7; 400, 43; 448, 25; 560, 5; 560, 47; 1344, 19;
    840, 13; 840, 31; 1008, 9; 1008, 39; 2016, 19; 1296, 13; 1296, 33;
    1400, 11; 1400, 29; 1400, 7; 1400, 37; 2400, 17; 2400, 23; 2800, 13;
    2800, 25; 5600, 19; 3240, 9; 3240, 31; 3360, 13; 3360, 25; 7168, 17;
    4096, 11; 4096, 27; 4200, 15; 4200, 21; 4536, 13; 4536, 23; 5600, 15;
    5600, 21;
];

/// A non-zero Coxeter value `eps * v^vexp` attached to a label.
pub(crate) type Entry = (u32, u32, Prime, i8, u32);

pub(crate) static G2_VALUES: &[Entry] = &[
    (1, 0, N, 1, 4),
    (1, 6, N, 1, 0),
    (1, 3, P, -1, 2),
    (1, 3, PP, -1, 2),
    (2, 1, N, 1, 2),
    (2, 2, N, -1, 2),
];

pub(crate) static F4_VALUES: &[Entry] = &[
    (1, 0, N, 1, 8),
    (1, 12, PP, 1, 4),
    (1, 12, P, 1, 4),
    (1, 24, N, 1, 0),
    (2, 4, PP, -1, 6),
    (2, 16, P, -1, 2),
    (2, 4, P, -1, 6),
    (2, 16, PP, -1, 2),
    (4, 8, N, 1, 4),
    (6, 6, P, -1, 4),
    (6, 6, PP, -1, 4),
    (12, 4, N, 1, 4),
];

pub(crate) static E6_VALUES: &[Entry] = &[
    (1, 0, N, 1, 12),
    (1, 36, N, 1, 0),
    (10, 9, N, -1, 6),
    (6, 1, N, -1, 10),
    (6, 25, N, -1, 2),
    (20, 10, N, 1, 6),
    (15, 4, N, -1, 8),
    (15, 16, N, -1, 4),
    (30, 3, N, 1, 8),
    (30, 15, N, 1, 4),
    (60, 8, N, 1, 6),
    (90, 8, N, -1, 6),
];

pub(crate) static E7_VALUES: &[Entry] = &[
    (1, 0, N, 1, 14),
    (1, 63, N, -1, 0),
    (7, 46, N, 1, 2),
    (7, 1, N, -1, 12),
    (35, 22, N, -1, 6),
    (35, 13, N, 1, 8),
    (35, 4, N, -1, 10),
    (35, 31, N, 1, 4),
    (56, 30, N, -1, 4),
    (56, 3, N, 1, 10),
    (70, 18, N, 1, 6),
    (70, 9, N, -1, 8),
    (280, 18, N, 1, 6),
    (280, 9, N, -1, 8),
    (280, 8, N, 1, 8),
    (280, 17, N, -1, 6),
    (512, 12, N, -1, 7),
    (512, 11, N, 1, 7),
];

pub(crate) static E8_VALUES: &[Entry] = &[
    (1, 0, N, 1, 16),
    (1, 120, N, 1, 0),
    (70, 32, N, -1, 8),
    (84, 4, N, -1, 12),
    (84, 64, N, -1, 4),
    (420, 20, N, -1, 8),
    (1134, 20, N, 1, 8),
    (1680, 22, N, 1, 8),
    (1344, 8, N, 1, 10),
    (1344, 38, N, 1, 6),
    (4480, 16, N, 1, 8),
    (4536, 18, N, 1, 8),
    (5670, 18, N, -1, 8),
    (4096, 12, N, -1, 9),
    (4096, 26, N, -1, 7),
    (8, 1, N, -1, 14),
    (8, 91, N, -1, 2),
    (56, 19, N, 1, 10),
    (56, 49, N, 1, 6),
    (112, 3, N, 1, 12),
    (112, 63, N, 1, 4),
    (448, 25, N, -1, 8),
    (448, 9, N, -1, 10),
    (448, 39, N, -1, 6),
    (1008, 9, N, -1, 10),
    (1008, 39, N, -1, 6),
    (2016, 19, N, 1, 8),
    (7168, 17, N, -1, 8),
    (4096, 11, N, 1, 9),
    (4096, 27, N, 1, 7),
];

/// `(vexp, a)` rows: `|lambda| = (q^(1/2))^vexp` and the exact power `q^a`
/// dividing the corresponding unipotent degrees.
pub(crate) static G2_EXPONENTS: &[(u32, u32)] = &[(0, 6), (2, 1), (4, 0)];
pub(crate) static F4_EXPONENTS: &[(u32, u32)] = &[(0, 24), (2, 13), (4, 4), (6, 1), (8, 0)];
pub(crate) static E6_EXPONENTS: &[(u32, u32)] =
    &[(0, 36), (2, 25), (4, 15), (6, 7), (8, 3), (10, 1), (12, 0)];
pub(crate) static E7_EXPONENTS: &[(u32, u32)] = &[
    (0, 63),
    (2, 46),
    (4, 30),
    (6, 16),
    (7, 11),
    (8, 7),
    (10, 3),
    (12, 1),
    (14, 0),
];
pub(crate) static E8_EXPONENTS: &[(u32, u32)] = &[
    (0, 120),
    (2, 91),
    (4, 63),
    (6, 37),
    (7, 26),
    (8, 16),
    (9, 11),
    (10, 7),
    (12, 3),
    (14, 1),
    (16, 0),
];

pub(crate) fn exceptional_labels(f: Family) -> &'static [Lab] {
    match f {
        Family::G2 => G2_LABELS,
        Family::F4 => F4_LABELS,
        Family::E6 => E6_LABELS,
        Family::E7 => E7_LABELS,
        Family::E8 => E8_LABELS,
        _ => &[],
    }
}

pub(crate) fn exceptional_values(f: Family) -> &'static [Entry] {
    match f {
        Family::G2 => G2_VALUES,
        Family::F4 => F4_VALUES,
        Family::E6 => E6_VALUES,
        Family::E7 => E7_VALUES,
        Family::E8 => E8_VALUES,
        _ => &[],
    }
}

pub(crate) fn exceptional_exponents(f: Family) -> &'static [(u32, u32)] {
    match f {
        Family::G2 => G2_EXPONENTS,
        Family::F4 => F4_EXPONENTS,
        Family::E6 => E6_EXPONENTS,
        Family::E7 => E7_EXPONENTS,
        Family::E8 => E8_EXPONENTS,
        _ => &[],
    }
}

#include "pwkt/prolongation.hpp"

// Literal data tables for the correction term Psi of the prolongation
// connection, transcribed line by line from the source tables.  Each row(...)
// call is one tabulated output coordinate; each .t(...) call is one input
// term, keeping the printed grouping factors so the transcription can be
// audited mechanically against the source.  The tables are validated through
// invariants (cross-table specialisation, swap symmetry, the a1 == a2
// vanishing of the conformal table) and through the downstream solution-space
// dimensions, never trusted blindly.  Known defects of the source tables are
// corrected in place and marked with a "source table" comment.

namespace pwkt::detail {

namespace {

struct Row {
    const PsiAdder& add;
    int gen;
    int out;
    Rational c;  // shared prefactor of the printed row

    const Row& t(int in, long k) const {
        add(gen, out, in, c * k);
        return *this;
    }
    const Row& t(int in, const Rational& k) const {
        add(gen, out, in, c * k);
        return *this;
    }
};

}  // namespace

void conformal_psi_table(const Params& p, const PsiAdder& add) {
    const Rational A = p.a1 - p.a2;
    const Rational g = p.gamma;
    const Rational a1 = p.a1;
    const Rational a2 = p.a2;
    auto row = [&add](int gen, int out, const Rational& prefactor) {
        return Row{add, gen, out, prefactor};
    };

    // --- generator e^1 ---
    row(1, 2, A / 30).t(11, 1);
    row(1, 3, -A / 30).t(12, 1);
    row(1, 5, -A / 60).t(13, 21).t(17, -2).t(35, 7).t(63, 2 * g);
    row(1, 6, A / 10).t(14, 2).t(62, -g).t(68, -g);
    row(1, 7, A / 1260)
        .t(15, 21 * 34)
        .t(29, 21 * 5)
        .t(36, 21 * -3)
        .t(56, 6 * 15 * g)
        .t(65, 6 * -12 * g)
        .t(69, 6 * -22 * g)
        .t(83, g * g * 36 + a1 * 194 - a2 * 230);
    row(1, 8, A / 60).t(13, 23).t(17, 2).t(35, 5).t(63, -2 * g);
    row(1, 9, -A / 1260)
        .t(16, 21 * 34)
        .t(30, 21 * 5)
        .t(37, 21 * -3)
        .t(55, -6 * 15 * g)
        .t(64, -6 * -22 * g)
        .t(70, -6 * 12 * g)
        .t(87, g * g * 36 - a1 * 230 + a2 * 194);
    row(1, 10, A / 2520)
        .t(28, 1428 * 2)
        .t(31, 1428)
        .t(38, 1428)
        .t(71, 312 * 2 * g)
        .t(74, 312 * -1 * g)
        .t(84, (g * g * 8 - a1 * 367 + a2 * 359) * 3)
        .t(89, (g * g * 8 + a1 * 359 - a2 * 367) * -3);
    row(1, 10, -A * A * 1531 / 1260).t(107, 1);
    row(1, 13, A / 24).t(62, 1).t(68, -1);
    row(1, 14, -A / 15).t(63, 1);
    row(1, 15, A / 1680).t(55, 555).t(64, 509).t(70, -599).t(87, 44 * g);
    row(1, 16, A / 1680).t(56, -555).t(65, -599).t(69, -509).t(83, 44 * g);
    row(1, 17, -A / 120).t(62, 5).t(68, 3);
    row(1, 18, -A / 30).t(63, 1);
    // The source table prints the bracket-part prefactor of this row as 9; the
    // swap symmetry of the bracket block and the explicit generic solution
    // space both force 3 (with 9 the generic solutions fail the curvature
    // equations by exactly the prefactor mismatch).
    row(1, 27, A / 168)
        .t(58, 3 * -57)
        .t(71, 3 * 36)
        .t(74, 3 * -17)
        .t(84, 8 * 7 * g)
        .t(89, 8 * 10 * g)
        .t(107, 8 * 2 * g);
    row(1, 28, A / 5040)
        .t(57, 3 * 150)
        .t(61, 3 * -511)
        .t(72, 3 * -1136)
        .t(73, 3 * 641)
        .t(77, 3 * 1239)
        .t(85, -12 * 83 * g)
        .t(88, -12 * -157 * g)
        .t(111, (g * g * 60 - a1 * 101 + a2 * 41) * -2);
    row(1, 29, A / 1680).t(55, 7 * -3).t(64, 7 * -9).t(70, 7 * 11).t(87, 4 * g);
    row(1, 30, A / 1680).t(56, 7 * 3).t(65, 7 * 11).t(69, 7 * 9).t(83, 4 * g);
    // The source table prints the first-order part of this row with the
    // opposite overall sign.  The sign below is forced (uniquely) by the swap
    // consistency of the w21/w28 relation rows and confirmed by the generic
    // solution space; the second-order w111 term is correct as printed.
    row(1, 31, -A / 168)
        .t(61, 47)
        .t(72, 47 * -4)
        .t(73, 47 * -1)
        .t(77, 47)
        .t(85, 22 * g)
        .t(88, 22 * g);
    row(1, 31, -A * A * 71 / 1008).t(111, 1);
    row(1, 32, A / 14).t(71, 9 * 2).t(74, 9 * -1).t(84, -2 * g).t(89, 2 * g);
    row(1, 33, -A / 504)
        .t(59, 12 * 39)
        .t(75, 12 * -47)
        .t(79, 12 * -47)
        .t(90, 12 * -22 * g)
        .t(103, 12 * -29 * g)
        .t(109, 12 * 27 * g)
        .t(112, g * g * 96 + a1 * 23 - a2 * 119);
    row(1, 34, -A / 504)
        .t(60, 12 * -39)
        .t(76, 12 * 47)
        .t(78, 12 * -47)
        .t(86, 12 * -22 * g)
        .t(99, 12 * -29 * g)
        .t(108, 12 * 27 * g)
        .t(113, (g * g * 96 - a1 * 119 + a2 * 23) * -1);
    row(1, 35, A / 40).t(62, 1).t(68, -1);
    row(1, 36, A / 1680).t(55, 7 * 9).t(64, 7 * 11).t(70, 7 * -17).t(87, -4 * g);
    row(1, 37, -A / 1680).t(56, 7 * 9).t(65, 7 * 17).t(69, 7 * 11).t(83, 4 * g);
    row(1, 38, A / 840)
        .t(61, 49 * -1)
        .t(72, 49 * 4)
        .t(73, 49)
        .t(77, 49 * -1)
        .t(85, -38 * g)
        .t(88, -38 * g);
    row(1, 38, A * A * 71 / 5040).t(111, 1);
    row(1, 55, A / 30).t(83, 1);
    row(1, 56, -A / 30).t(87, 1);
    row(1, 57, -A * 19 / 420).t(84, 1).t(89, -1);
    row(1, 58, A / 84).t(85, 1).t(88, 1);
    row(1, 59, A / 28).t(86, 1).t(108, -11).t(113, 2 * g);
    row(1, 60, A / 28).t(90, -1).t(109, 11).t(112, 2 * g);
    row(1, 61, -A / 20).t(84, 1).t(89, -1);
    row(1, 64, A * 53 / 840).t(83, 1);
    row(1, 65, -A * 53 / 840).t(87, 1);
    row(1, 69, -A * 53 / 840).t(87, 1);
    row(1, 70, -A * 53 / 840).t(83, 1);
    row(1, 71, -A / 84).t(85, -5).t(88, 34).t(111, g);
    row(1, 72, -A / 840).t(84, 67).t(89, -237).t(107, 90);
    row(1, 73, A * 23 / 84).t(84, 1).t(89, -1);
    row(1, 74, -A * 29 / 84).t(85, 1).t(88, 1);
    row(1, 75, -A / 84).t(86, 101).t(99, 28).t(108, -33).t(113, 20 * g);
    row(1, 76, -A / 84).t(90, -101).t(103, -28).t(109, 33).t(112, 20 * g);
    row(1, 77, -A * 2 / 5).t(84, 1).t(89, -1);
    row(1, 78, -A / 6).t(90, -8).t(103, 2).t(109, 5).t(112, g);
    row(1, 79, A / 6).t(86, 8).t(99, -2).t(108, -5).t(113, g);
    row(1, 80, -A / 6).t(100, 11).t(105, 7).t(116, g);
    row(1, 81, -A / 2).t(101, -3).t(104, 3).t(115, g).t(118, g);
    row(1, 82, -A / 6).t(100, -7).t(105, -11).t(116, g);
    row(1, 84, -A / 12).t(111, 1);
    row(1, 86, A / 12).t(112, 1);
    row(1, 89, A / 12).t(111, 1);
    row(1, 90, -A / 12).t(113, 1);
    row(1, 99, -A / 6).t(112, 1);
    row(1, 100, -A / 6).t(115, 2).t(118, 1);
    row(1, 101, -A / 6).t(116, 1);
    // The source table prints this row twice with identical values.
    row(1, 102, -A / 2).t(117, 1);
    row(1, 103, A / 6).t(113, 1);
    row(1, 104, A / 6).t(116, 1);
    row(1, 105, A / 6).t(115, 1).t(118, 2);
    row(1, 106, A / 2).t(119, 1);
    row(1, 108, A / 12).t(112, 1);
    row(1, 109, -A / 12).t(113, 1);
    row(1, 110, -A / 12).t(115, 1).t(118, -1);

    // --- generator e^2 ---
    row(2, 5, -A * 19 / 60).t(11, 1);
    row(2, 6, -A * 7 / 30).t(12, 1);
    row(2, 7, A / 420).t(13, -98).t(17, 7).t(35, 7 * 11).t(63, 8 * g);
    row(2, 8, A * 7 / 20).t(11, 1);
    row(2, 9, A / 420).t(14, 7 * 22).t(18, 7 * -5).t(62, -2 * g).t(68, -2 * -9 * g);
    row(2, 10, A / 2520)
        .t(15, 84 * 17)
        .t(29, 84 * -5)
        .t(36, 84 * -14)
        .t(56, -24 * 15 * g)
        .t(65, -24 * g)
        // Source table prints -24*9 here; the swap image of the (e^3)_{10} row
        // fixes the opposite sign (the two printed rows contradict each other,
        // and the e^2 block carries the other confirmed misprints).
        .t(69, 24 * 9 * g)
        .t(83, (g * g * 168 - a1 * 325 + a2 * 157) * -1);
    row(2, 15, A / 1680).t(62, 579).t(68, 529);
    row(2, 16, -A * 11 / 840).t(63, 1);
    row(2, 27, A / 210).t(56, 3 * 49).t(65, 3 * -43).t(69, -127).t(83, -64 * g);
    row(2, 28, A / 1680).t(55, -363).t(64, 787).t(70, -785).t(87, -672 * g);
    row(2, 29, A / 240).t(62, 1).t(68, -5);
    row(2, 30, A / 40).t(63, 1);
    row(2, 31, A / 1680).t(55, -513).t(64, 557).t(70, -495).t(87, 168 * g);
    row(2, 32, A / 840).t(56, 267).t(65, -223).t(69, -261).t(83, 100 * g);
    row(2, 33, A / 1680)
        .t(57, 3 * 570)
        .t(61, 3 * -203)
        .t(72, 3 * -248)
        .t(73, -1141)
        .t(77, -739)
        .t(85, 24 * 13 * g)
        .t(88, 24 * -7 * g)
        .t(111, g * g * 280 - a1 * 69 - a2 * 211);
    row(2, 34, A / 168)
        .t(58, 15)
        .t(71, -52)
        .t(74, 23)
        .t(84, 4 * 25 * g)
        .t(89, 4 * 21 * g)
        .t(107, 4 * 52 * g);
    row(2, 36, A / 240).t(62, 17).t(68, 11);
    row(2, 37, A / 40).t(63, 1);
    row(2, 38, A / 1680).t(55, 7 * -9).t(64, 7 * 17).t(70, 7 * -11).t(87, 80 * g);
    row(2, 57, A / 84).t(83, 1);
    row(2, 58, -A * 19 / 420).t(87, 1);
    row(2, 59, A / 420).t(84, -4).t(89, 19).t(107, 165);
    // Source table prints +A/84; the sign below is forced by the swap image of
    // (e^3)_{59} and by the generic solution space (the printed sign breaks
    // the w111 curvature equations and drops the special-locus dimensions).
    row(2, 60, -A / 84).t(85, -1).t(88, 2).t(111, 6 * g);
    row(2, 61, A / 20).t(83, 1);
    row(2, 71, A * 41 / 120).t(87, 1);
    row(2, 72, A / 60).t(83, 1);
    row(2, 73, -A * 2 / 5).t(83, 1);
    row(2, 74, A * 29 / 84).t(87, 1);
    // Source table prints +A/840; the sign below is forced by the swap image
    // of (e^3)_{76} and confirmed by the generic solution space.
    row(2, 75, -A / 840).t(84, 823).t(89, 577).t(107, 700);
    row(2, 76, A / 12).t(85, -5).t(88, 7).t(111, 3 * g);
    row(2, 77, A * 23 / 84).t(83, 1);
    row(2, 78, A / 84).t(85, -52).t(88, 77).t(111, 13 * g);
    row(2, 79, A / 840).t(84, 437).t(89, 293).t(107, 330);
    row(2, 80, -A / 42).t(86, -25).t(99, -77).t(108, 16).t(113, 13 * g);
    // Source table prints 3*-12 on w90; the swap image of (e^3)_{81} (3*13 on
    // w86) fixes 13, and the generic solution space confirms it.
    row(2, 81, A / 84).t(90, 3 * -13).t(103, 3 * 42).t(109, 23).t(112, 50 * g);
    row(2, 82, A / 6).t(86, -2).t(99, -7).t(108, 1).t(113, 3 * g);
    row(2, 99, A / 6).t(111, 1);
    row(2, 100, A * 5 / 12).t(112, 1);
    row(2, 101, A / 4).t(113, 1);
    row(2, 102, -A / 6).t(115, 2).t(118, 1);
    row(2, 104, A / 6).t(113, 1);
    row(2, 105, -A / 6).t(112, 1);
    row(2, 108, -A / 12).t(111, 1);
    row(2, 110, A / 12).t(112, 1);

    // --- generator e^3 ---
    row(3, 5, -A * 7 / 20).t(12, 1);
    row(3, 6, A * 7 / 30).t(11, 1);
    row(3, 7, A / 420).t(14, 119).t(18, 35).t(62, 2 * 9 * g).t(68, 2 * -1 * g);
    row(3, 8, A * 19 / 60).t(12, 1);
    row(3, 9, A / 420).t(13, 7 * 15).t(17, 7).t(35, 7 * -12).t(63, 8 * g);
    row(3, 10, A / 2520)
        .t(16, 84 * -17)
        .t(30, 84 * 5)
        .t(37, 84 * 14)
        .t(55, -24 * 15 * g)
        .t(64, -24 * -9 * g)
        .t(70, -24 * -1 * g)
        .t(87, g * g * 168 + a1 * 157 - a2 * 325);
    row(3, 15, A * 11 / 840).t(63, 1);
    row(3, 16, -A / 1680).t(62, 529).t(68, 579);
    row(3, 27, -A / 840).t(55, 321).t(64, -247).t(70, 293).t(87, 356 * g);
    row(3, 28, A / 1680).t(56, -939).t(65, 1357).t(69, 1463).t(83, 424 * g);
    row(3, 29, -A / 40).t(63, 1);
    row(3, 30, A / 240).t(62, 5).t(68, -1);
    row(3, 31, A / 1680).t(56, 513).t(65, -495).t(69, -557).t(83, 168 * g);
    row(3, 32, -A / 840).t(55, 3 * -89).t(64, 3 * 87).t(70, -223).t(87, 100 * g);
    row(3, 33, A / 168)
        .t(58, 15)
        .t(71, 52)
        .t(74, -29)
        .t(84, 4 * 21 * g)
        .t(89, 4 * 25 * g)
        .t(107, 4 * 52 * g);
    row(3, 34, A / 1680)
        .t(57, 3 * -570)
        .t(61, 3 * 327)
        .t(72, 3 * -248)
        .t(73, 769)
        .t(77, 1111)
        .t(85, -24 * 7 * g)
        .t(88, -24 * -13 * g)
        .t(111, (g * g * 280 - a1 * 211 - a2 * 69) * -1);
    row(3, 36, -A / 40).t(63, 1);
    row(3, 37, -A / 240).t(62, 11).t(68, 17);
    row(3, 38, A / 1680).t(56, 7 * 9).t(65, 7 * -11).t(69, 7 * -17).t(83, 80 * g);
    row(3, 57, -A / 84).t(87, 1);
    row(3, 58, -A * 19 / 420).t(83, 1);
    row(3, 59, -A / 84).t(85, -2).t(88, 1).t(111, 6 * g);
    row(3, 60, -A / 420).t(84, 19).t(89, -4).t(107, 165);
    row(3, 61, -A / 20).t(87, 1);
    row(3, 71, A / 280).t(83, 1);
    row(3, 72, -A * 29 / 84).t(87, 1);
    row(3, 73, A * 2 / 5).t(87, 1);
    row(3, 74, A * 29 / 84).t(83, 1);
    row(3, 75, A / 12).t(85, -7).t(88, 5).t(111, 3 * g);
    row(3, 76, A / 840).t(84, 577).t(89, 823).t(107, 700);
    row(3, 77, -A * 23 / 84).t(87, 1);
    row(3, 78, A / 840).t(84, 293).t(89, 437).t(107, 330);
    row(3, 79, -A / 84).t(85, -77).t(88, 52).t(111, 13 * g);
    row(3, 80, A / 6).t(90, 2).t(103, 7).t(109, -1).t(112, 3 * g);
    row(3, 81, A / 84).t(86, 3 * 13).t(99, 3 * -42).t(108, -23).t(113, 50 * g);
    row(3, 82, -A / 42).t(90, 25).t(103, 77).t(109, -16).t(112, 13 * g);
    row(3, 100, A / 6).t(113, 1);
    row(3, 101, -A / 6).t(112, 1);
    row(3, 103, -A / 6).t(111, 1);
    row(3, 104, -A / 4).t(112, 1);
    row(3, 105, -A * 5 / 12).t(113, 1);
    row(3, 106, A / 6).t(115, 1).t(118, 2);
    row(3, 109, A / 12).t(111, 1);
    row(3, 110, -A / 12).t(113, 1);

    // --- generator e^4 ---
    // The source table prints a stray "=" inside this row's coefficient; the
    // value is A/20.
    // The source table prints both of these rows with coefficient +A/20, but
    // the swap symmetry forces opposite relative signs.  Both coordinates
    // vanish identically on every solution space (checked at all catalog
    // points), so the two possible repairs are equivalent for every computed
    // quantity; the first row is flipped by convention.
    row(4, 7, -A / 20).t(11, 1);
    row(4, 9, A / 20).t(12, 1);
    row(4, 10, A / 70).t(13, 7).t(17, 7 * 2).t(35, 7 * -1).t(63, -4 * g);
    row(4, 27, -A * 3 / 140).t(63, 1);
    row(4, 28, -A / 840).t(62, 167).t(68, 149);
    row(4, 31, A * 3 / 140).t(62, 1).t(68, -1);
    row(4, 32, -A * 3 / 70).t(63, 1);
    row(4, 33, A / 840).t(55, -129).t(64, 131).t(70, -185).t(87, 44 * g);
    row(4, 34, A / 840).t(56, 129).t(65, -185).t(69, -131).t(83, 44 * g);
    row(4, 59, -A * 3 / 140).t(83, 1);
    row(4, 60, A * 3 / 140).t(87, 1);
    row(4, 75, -A * 197 / 840).t(83, 1);
    row(4, 76, A * 197 / 840).t(87, 1);
    row(4, 78, A * 193 / 840).t(87, 1);
    row(4, 79, A * 193 / 840).t(83, 1);
    row(4, 80, -A / 420).t(84, 197).t(89, 193).t(107, 230);
    row(4, 81, A / 84).t(85, 39 * -1).t(88, 39).t(111, 16 * g);
    row(4, 82, A / 420).t(84, 193).t(89, 197).t(107, 230);
    row(4, 100, A / 12).t(111, 1);
    row(4, 102, -A / 12).t(112, 1);
    row(4, 105, -A / 12).t(111, 1);
    row(4, 106, A / 12).t(113, 1);
}

void projective_psi_table(const Params& p, const PsiAdder& add) {
    const Rational a1 = p.a1;
    const Rational a2 = p.a2;
    const Rational g = p.gamma;
    const Rational e = p.eps_q();
    auto row = [&add](int gen, int out, const Rational& prefactor) {
        return Row{add, gen, out, prefactor};
    };

    // --- generator e^1 ---
    row(1, 11, -(a1 * 2 - a2) / 3).t(2, 1);
    row(1, 12, (a1 - a2 * 2) / 3).t(3, 1);
    row(1, 13, (a1 + a2) / 3).t(4, 1);
    row(1, 14, (a1 - a2) / 3).t(6, 1);
    row(1, 15, a1 / 3).t(7, 1);
    row(1, 16, a2 / 3).t(9, 1);
    row(1, 17, a1 / 6).t(4, 3).t(5, -2);
    row(1, 17, a2 / 6).t(5, 1);
    row(1, 18, (a1 - a2 * 3) / 12).t(6, 1);
    row(1, 19, (a1 + a2 * 2) / 12).t(7, 1);
    row(1, 20, -a1 / 4).t(9, 1);
    row(1, 21, -a1 / 4).t(10, 1);
    row(1, 24, a2 / 6).t(4, 3).t(8, -2);
    row(1, 24, a1 / 6).t(8, 1);
    row(1, 25, (a1 * 2 + a2) / 12).t(9, 1);
    row(1, 26, a2 / 4).t(7, 1);
    row(1, 28, -a2 / 4).t(10, 1);
    row(1, 31, (a1 + a2) / 6).t(10, 1);
    row(1, 35, a1 / 6).t(4, e * -6).t(5, e * 4).t(6, -3 * g).t(13, 9).t(17, -12);
    row(1, 35, -a2 / 6).t(5, e * 2).t(6, -3 * g).t(17, -6);
    row(1, 36, (a1 - a2) * g / 4).t(4, 2).t(5, -1).t(8, -1);
    row(1, 36, a1 / 12).t(6, e * 2).t(14, -15).t(18, -6);
    row(1, 36, a2 / 12).t(6, e * 2).t(14, 21).t(18, -6);
    row(1, 37, a1 / 12).t(7, e * 2).t(9, -3 * g).t(15, -15).t(19, -6);
    row(1, 37, -a2 / 12).t(7, e * 4).t(9, -3 * g).t(15, 6).t(19, -12);
    row(1, 38, a1 / 12).t(9, e * 2).t(7, g).t(16, -11).t(20, -12).t(25, -2);
    row(1, 38, -a2 / 12).t(7, g).t(20, -8);
    row(1, 39, a1 / 6).t(10, e).t(21, -6).t(31, -1);
    row(1, 39, a2 / 3).t(21, 1);
    row(1, 40, a1 / 12).t(10, -g).t(27, -8).t(32, 8);
    row(1, 40, a2 / 12).t(10, g).t(32, -8);
    row(1, 41, a2 / 6).t(4, e * -6).t(8, e * 4).t(6, 3 * g).t(13, 9).t(24, -12);
    row(1, 41, -a1 / 6).t(6, 3 * g).t(8, e * 2).t(24, -6);
    row(1, 42, a1 / 12).t(9, e * -4).t(7, -3 * g).t(16, -6).t(25, 12);
    row(1, 42, a2 / 12).t(7, 3 * g).t(9, e * 2).t(16, -15).t(25, -6);
    row(1, 43, a2 / 12).t(7, e * -2).t(9, g).t(15, 11).t(19, 2).t(26, -12);
    row(1, 43, -a1 / 12).t(9, g).t(26, -8);
    row(1, 45, a2 / 6).t(10, e).t(28, -6).t(31, -1);
    row(1, 45, a1 / 3).t(28, 1);
    row(1, 46, -(a1 + a2) / 3).t(10, e).t(31, -3);
    row(1, 47, (a1 - a2) * 2 / 3).t(27, 1);
    row(1, 47, a2 * 2 / 3).t(32, 1);
    row(1, 48, (a1 * 2 + a2) / 3).t(33, 1);
    row(1, 49, (a1 + a2 * 2) / 3).t(34, 1);
    row(1, 50, a2 * 2 / 3).t(21, 1);
    row(1, 50, a1 * 2 / 3).t(28, 1);
    row(1, 51, a1 / 3).t(34, 1);
    row(1, 52, -a2 / 3).t(33, 1);

    // --- generator e^2 ---
    row(2, 11, a1 / 6).t(4, 3).t(5, -2);
    row(2, 11, a2 / 6).t(5, 1);
    row(2, 12, -(a1 + a2) / 12).t(6, 1);
    row(2, 13, -(a1 - a2 * 2) / 12).t(7, 1);
    row(2, 14, -a1 / 12).t(9, 1);
    row(2, 15, -a1 / 12).t(10, 1);
    row(2, 17, a1).t(7, 1);
    row(2, 18, a1 / 3).t(9, 1);
    row(2, 19, a1 / 3).t(10, 1);
    row(2, 24, a2 / 4).t(7, 1);
    row(2, 35, -a1 / 2).t(7, e * 4).t(15, 6).t(19, -9);
    row(2, 36, a1 / 12).t(9, e * -8).t(7, g * 8).t(16, -16).t(20, -9).t(25, 20);
    row(2, 36, -a2 / 12).t(7, g * 8).t(20, -7);
    row(2, 37, a1 / 12).t(10, e * -8).t(21, -9).t(31, 20);
    row(2, 37, a2 / 6).t(21, 1);
    row(2, 38, -a1 * 3 / 4).t(27, 1).t(32, -3);
    row(2, 39, a1 * 3 / 2).t(33, 1);
    row(2, 40, a1).t(34, 1);
    row(2, 41, a2 / 6).t(7, e * -4).t(9, g * -4).t(15, -2).t(19, 7);
    row(2, 41, a1 / 3).t(9, g * 2).t(26, -1);
    row(2, 42, a1 / 12).t(10, g * 4).t(27, -2).t(32, -2);
    row(2, 42, -a2 / 12).t(10, g * 4).t(27, 5).t(32, -7);
    row(2, 43, a2 * 5 / 12).t(21, 1);
    row(2, 43, -a1 / 3).t(28, 1);
    row(2, 45, a2 / 6).t(33, 1);
    row(2, 46, -(a1 - a2) / 3).t(33, 1);
    row(2, 47, -a1 * 2 / 3).t(34, 1);

    // --- generator e^3 ---
    row(3, 11, -(a1 + a2) / 12).t(6, 1);
    row(3, 12, a2 / 6).t(4, 3).t(8, -2);
    row(3, 12, a1 / 6).t(8, 1);
    row(3, 13, (a1 * 2 - a2) / 12).t(9, 1);
    row(3, 14, a2 / 12).t(7, 1);
    row(3, 16, -a2 / 12).t(10, 1);
    row(3, 17, a1 / 4).t(9, 1);
    row(3, 18, a2 * 5 / 12).t(7, 1);
    row(3, 24, a2).t(9, 1);
    row(3, 25, a2 / 3).t(10, 1);
    row(3, 35, a1 / 6).t(9, e * -4).t(7, g * 4).t(16, -2).t(25, 7);
    row(3, 35, -a2 / 3).t(7, g * 2).t(20, -1);
    row(3, 36, a2 / 12).t(7, e * -8).t(9, g * -8).t(15, -16).t(19, 20).t(26, 9);
    row(3, 36, a1 / 12).t(9, g * 8).t(26, -7);
    row(3, 37, a1 / 12).t(10, g * 4).t(27, -5).t(32, -2);
    row(3, 37, -a2 / 6).t(10, g * 2).t(27, 1).t(32, -2);
    row(3, 38, a2 / 3).t(21, 1);
    row(3, 38, -a1 * 5 / 12).t(28, 1);
    row(3, 39, a1 / 6).t(34, 1);
    row(3, 40, a2 / 3).t(33, 1);
    row(3, 41, -a2 / 2).t(9, e * 4).t(16, 6).t(25, -9);
    row(3, 42, a2 / 12).t(10, e * -8).t(28, -9).t(31, 20);
    row(3, 42, a1 / 6).t(28, 1);
    row(3, 43, a2 * 3 / 4).t(27, 1).t(32, 2);
    row(3, 45, a2 * 3 / 2).t(34, 1);
    row(3, 46, (a1 - a2) / 3).t(34, 1);
    row(3, 47, a2 * 2 / 3).t(33, 1);

    // --- generator e^4 ---
    row(4, 11, -(a1 - a2 * 2) / 12).t(7, 1);
    row(4, 12, (a1 * 2 - a2) / 12).t(9, 1);
    row(4, 13, (a1 + a2) / 6).t(10, 1);
    row(4, 17, a1 / 4).t(10, 1);
    row(4, 24, a2 / 4).t(10, 1);
    // The source table omits this row.  It is forced by the swap symmetry
    // (a1 <-> a2, gamma -> -gamma, third and fourth tractor slots exchanged)
    // applied to the printed (e^4)_{41} row, and it specialises at a1 == a2
    // to the equal-parameters table's (e^4)_{35} row.
    row(4, 35, a1 / 6).t(10, e * -4).t(31, 7);
    row(4, 35, -a2 / 3).t(21, 1);
    row(4, 36, a1 / 12).t(10, g * 4).t(27, -2).t(32, -5);
    row(4, 36, -a2 / 12).t(10, g * 4).t(27, 2).t(32, -7);
    row(4, 37, -(a1 * 7 + a2 * 2) / 12).t(33, 1);
    row(4, 38, -a1 * 7 / 12).t(34, 1);
    row(4, 41, a2 / 6).t(10, e * -4).t(31, 7);
    row(4, 41, -a1 / 3).t(28, 1);
    row(4, 42, -(a1 * 2 + a2 * 7) / 12).t(34, 1);
    row(4, 43, a2 * 7 / 12).t(33, 1);
}

void projective_equal_psi_table(const Params& p, const PsiAdder& add) {
    // Table for the rotationally symmetric case; callers guarantee a1 == a2.
    const Rational a = p.a1;
    const Rational e = p.eps_q();
    auto row = [&add](int gen, int out, const Rational& prefactor) {
        return Row{add, gen, out, prefactor};
    };

    // --- generator e^1 ---
    row(1, 11, -a / 3).t(2, 1);
    row(1, 12, -a / 3).t(3, 1);
    row(1, 13, a * 2 / 3).t(4, 1);
    row(1, 15, a / 3).t(7, 1);
    row(1, 16, a / 3).t(9, 1);
    row(1, 17, a / 6).t(4, 3).t(5, -1);
    row(1, 18, -a / 6).t(6, 1);
    row(1, 19, a / 4).t(7, 1);
    row(1, 20, -a / 4).t(9, 1);
    row(1, 21, -a / 4).t(10, 1);
    row(1, 24, a / 6).t(4, 3).t(8, -1);
    row(1, 25, a / 4).t(9, 1);
    row(1, 26, a / 4).t(7, 1);
    row(1, 28, -a / 4).t(10, 1);
    row(1, 31, a / 3).t(10, 1);
    row(1, 35, -a).t(4, e).t(5, -e / 3).t(13, rat(-3, 2)).t(17, 1);
    row(1, 36, a / 6).t(6, e * 2).t(14, 3).t(18, -6);
    // The source table prints the (e^1)_{42} line again here (w9/w16/w25).
    // The corrected row below is forced by the swap symmetry of the
    // rotationally symmetric family and agrees with the a1 == a2
    // specialisation of the general table.
    row(1, 37, -a / 12).t(7, e * 2).t(15, 21).t(19, -6);
    row(1, 38, a / 12).t(9, e * 2).t(16, -11).t(20, -4).t(25, -2);
    row(1, 39, a / 6).t(10, e).t(21, -4).t(31, -1);
    row(1, 40, -a * 2 / 3).t(27, 1);
    row(1, 41, -a).t(4, e).t(8, -e / 3).t(13, rat(-3, 2)).t(24, 1);
    row(1, 42, -a / 12).t(9, e * 2).t(16, 21).t(25, -6);
    row(1, 43, -a / 12).t(7, e * 2).t(15, -11).t(19, -2).t(26, 4);
    row(1, 45, a / 6).t(10, e).t(28, -4).t(31, -1);
    row(1, 46, -a * 2 / 3).t(10, e).t(31, -3);
    row(1, 47, a * 2 / 3).t(32, 1);
    row(1, 48, a).t(33, 1);
    row(1, 49, a).t(34, 1);
    row(1, 50, a * 2 / 3).t(21, 1).t(28, 1);
    row(1, 51, a / 3).t(34, 1);
    row(1, 52, -a / 3).t(33, 1);

    // --- generator e^2 ---
    row(2, 11, a / 6).t(4, 3).t(5, -1);
    row(2, 12, -a / 6).t(6, 1);
    row(2, 13, a / 12).t(7, 1);
    row(2, 14, -a / 12).t(9, 1);
    row(2, 15, -a / 12).t(10, 1);
    row(2, 17, a).t(7, 1);
    row(2, 18, a / 3).t(9, 1);
    row(2, 19, a / 3).t(10, 1);
    row(2, 24, a / 4).t(7, 1);
    row(2, 35, -a / 2).t(7, e * 4).t(15, 6).t(19, -9);
    row(2, 36, -a / 6).t(9, e * 4).t(16, 8).t(20, 1).t(25, -10);
    row(2, 37, -a / 12).t(10, e * 8).t(21, 7).t(31, -20);
    row(2, 38, -a * 3 / 4).t(27, 1).t(32, -3);
    row(2, 39, a * 3 / 2).t(33, 1);
    row(2, 40, a).t(34, 1);
    row(2, 41, -a / 6).t(7, e * 4).t(15, 2).t(19, -7).t(26, 2);
    row(2, 42, -a / 12).t(27, 7).t(32, -5);
    row(2, 43, a / 12).t(21, 5).t(28, -4);
    row(2, 45, a / 6).t(33, 1);
    row(2, 47, -a * 2 / 3).t(34, 1);

    // --- generator e^3 ---
    row(3, 11, -a / 6).t(6, 1);
    row(3, 12, a / 6).t(4, 3).t(8, -1);
    row(3, 13, a / 12).t(9, 1);
    row(3, 14, a / 12).t(7, 1);
    row(3, 16, -a / 12).t(10, 1);
    row(3, 17, a / 4).t(9, 1);
    row(3, 18, a * 5 / 12).t(7, 1);
    row(3, 24, a).t(9, 1);
    row(3, 25, a / 3).t(10, 1);
    row(3, 35, -a / 6).t(9, e * 4).t(16, 2).t(20, -2).t(25, -7);
    row(3, 36, -a / 6).t(7, e * 4).t(15, 8).t(19, -10).t(26, -1);
    row(3, 37, -a / 12).t(27, 7).t(32, -2);
    row(3, 38, a / 12).t(21, 4).t(28, -5);
    row(3, 39, a / 6).t(34, 1);
    row(3, 40, a / 3).t(33, 1);
    row(3, 41, -a / 2).t(9, e * 4).t(16, 6).t(25, -9);
    row(3, 42, -a / 12).t(10, e * 8).t(28, 7).t(31, -20);
    row(3, 43, a * 3 / 4).t(27, 1).t(32, 2);
    row(3, 45, a * 3 / 2).t(34, 1);
    row(3, 47, a * 2 / 3).t(33, 1);

    // --- generator e^4 ---
    row(4, 11, a / 12).t(7, 1);
    row(4, 12, a / 12).t(9, 1);
    row(4, 13, a / 3).t(10, 1);
    row(4, 17, a / 4).t(10, 1);
    row(4, 24, a / 4).t(10, 1);
    row(4, 35, -a / 6).t(10, e * 4).t(21, 2).t(31, -7);
    row(4, 36, -a / 6).t(27, 2).t(32, -1);
    row(4, 37, -a * 3 / 4).t(33, 1);
    row(4, 38, -a * 7 / 12).t(34, 1);
    row(4, 41, -a / 6).t(10, e * 4).t(28, 2).t(31, -7);
    row(4, 42, -a * 3 / 4).t(34, 1);
    row(4, 43, a * 7 / 12).t(33, 1);
}

}  // namespace pwkt::detail

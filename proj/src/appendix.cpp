#include "mahon/appendix.hpp"

#include <algorithm>
#include <initializer_list>

#include "mahon/detectors.hpp"

namespace mahon {

namespace {

ExponentVector ingest(std::initializer_list<unsigned> source) {
    // Source convention weights the largest part first; ours the smallest.
    std::vector<unsigned> v(source);
    std::reverse(v.begin(), v.end());
    return ExponentVector(std::move(v));
}

CombinationTerm rational_term(unsigned conductor, const Rational& c,
                              std::initializer_list<unsigned> vec,
                              unsigned d_power = 0, unsigned twist = 0) {
    return CombinationTerm{d_power, ingest(vec), twist,
                           Cyclo::from_rational(conductor, c)};
}

struct CubeRow {
    const char* coeff;
    std::initializer_list<std::initializer_list<unsigned>> vectors;
};

// clang-format off
const CubeRow kCubeTable[] = {
    {"111800296700031174473803912086849297415061538120147327369024000", {{1}}},
    {"-166752101806011768239059984406622080125739818487572078291361760", {{3}}},
    {"62767494936926484419500539507127762695263456351080655000628648", {{5}}},
    {"-8093327520713830454881403544414940189352187143324915609260800", {{7}}},
    {"280441876128809798819406207780253229131515792004956171930233", {{9}}},
    {"-2796626716231217376090778794330046298729981595955539822240", {{11}}},
    {"-7786923725330582178016165199689395032162976346176403887", {{13}}},
    {"228492332183970584572974559805984237526583822048824920", {{15}}},
    {"-1215830626333999290688149213865467730310825113076517", {{17}}},
    {"2586402206320506298967818494987523980980061899880", {{19}}},
    {"-1410067106844346141699284499808017619922382477", {{21}}},
    {"-3994171532397060636616394065429339974329441343990850859754624000", {{1, 1}}},
    {"2882656654596970644128099950941854712719970786862658002184240640", {{1, 3}, {3, 1}}},
    {"-55606741605506434789774529597134283862175560363960917017922880", {{1, 5}, {5, 1}}},
    {"-31553740779586632034902588733558781970650743391743394004783040", {{1, 7}, {7, 1}}},
    {"1236365123530668916047274374112405703022697561233767698983840", {{1, 9}, {9, 1}}},
    {"-8134808611384895119269896023741057784440125881909492385720", {{1, 11}, {11, 1}}},
    {"-59580798330731620522824089676425339773368687751394331040", {{1, 13}, {13, 1}}},
    {"726670078684395930235260971431002859974544415177094000", {{1, 15}, {15, 1}}},
    {"-2518073299368806196400137760585407383384131378897920", {{1, 17}, {17, 1}}},
    {"1015449367245264541365106760948433593634244514120", {{1, 19}, {19, 1}}},
    {"34425095416505212317885657088677311603740090774622195871398400000", {{1, 1, 1}}},
    {"832023026419490860720168658116504249351153130277635758982553600", {{1, 1, 3}, {1, 3, 1}, {3, 1, 1}}},
    {"-543579483064233292326674999312725986268529256505271978016384000", {{1, 1, 5}, {1, 5, 1}, {5, 1, 1}}},
    {"-92019503837778700907398744960854625745491505616944777544192000", {{1, 1, 7}, {1, 7, 1}, {7, 1, 1}}},
    {"4269209011502676546086277141098184955545823619844603765888000", {{1, 1, 9}, {1, 9, 1}, {9, 1, 1}}},
    {"-1229617491336773807894731990558973652669489467404488268800", {{1, 1, 11}, {1, 11, 1}, {11, 1, 1}}},
    {"-229089308125621772523737067819807506681260603464966144000", {{1, 1, 13}, {1, 13, 1}, {13, 1, 1}}},
    {"2160624056705401494233143285716822486526356010777267200", {{1, 1, 15}, {1, 15, 1}, {15, 1, 1}}},
};
// clang-format on

}  // namespace

LinearCombination published_cube_expression() {
    LinearCombination comb;
    comb.conductor = 1;
    for (const auto& row : kCubeTable) {
        const Rational c = parse_rational(row.coeff);
        for (auto vec : row.vectors) comb.terms.push_back(rational_term(1, c, vec));
    }
    return comb;
}

std::vector<LinearCombination> published_cube_basis() {
    std::vector<LinearCombination> basis;
    for (const auto& row : kCubeTable) {
        for (auto vec : row.vectors) {
            LinearCombination atom;
            atom.conductor = 1;
            atom.terms.push_back(rational_term(1, Rational(1), vec));
            basis.push_back(std::move(atom));
        }
    }
    return basis;
}

namespace {

// Adds (base + omega_part (w^{n-1} + w^{2n-2})) M_vec(n), i.e. the three
// twist terms (s=0, base), (s=1, omega_part w^2), (s=2, omega_part w).
void add_ap_row(LinearCombination& comb, long base, long omega_part,
                std::initializer_list<unsigned> vec) {
    comb.terms.push_back(rational_term(3, Rational(base), vec));
    if (omega_part != 0) {
        const Cyclo w = root_power(3, 1);
        const Cyclo w2 = root_power(3, 2);
        comb.terms.push_back(
            CombinationTerm{0, ingest(vec), 1, ring_scale(w2, Integer(omega_part))});
        comb.terms.push_back(
            CombinationTerm{0, ingest(vec), 2, ring_scale(w, Integer(omega_part))});
    }
}

}  // namespace

LinearCombination published_ap_expression() {
    LinearCombination comb;
    comb.conductor = 3;
    add_ap_row(comb, 4 * 199, 4 * 21, {1});
    add_ap_row(comb, 7 * 1, 7 * -80, {3});
    add_ap_row(comb, 42 * 7, 42 * -2, {5});
    add_ap_row(comb, 23, 0, {7});
    add_ap_row(comb, -1680 * 11, -1680 * -4, {1, 3});
    add_ap_row(comb, -1680 * 11, -1680 * -4, {3, 1});
    add_ap_row(comb, -10752, 0, {1, 1});
    add_ap_row(comb, -3024, 0, {1, 5});
    add_ap_row(comb, -3024, 0, {5, 1});
    add_ap_row(comb, 282240, 0, {1, 1, 1});
    add_ap_row(comb, 120960, 0, {1, 1, 3});
    add_ap_row(comb, 120960, 0, {1, 3, 1});
    add_ap_row(comb, 120960, 0, {3, 1, 1});
    add_ap_row(comb, -161280, 0, {1, 1, 1, 1});
    return comb;
}

std::vector<LinearCombination> odd_entry_ap_basis() {
    static const std::initializer_list<unsigned> vectors[] = {
        {1}, {3}, {5}, {7},
        {1, 1}, {1, 3}, {3, 1}, {3, 3}, {1, 5}, {5, 1},
        {1, 1, 1}, {1, 1, 3}, {1, 3, 1}, {3, 1, 1},
        {1, 1, 1, 1},
    };
    std::vector<LinearCombination> basis;
    for (auto vec : vectors) {
        for (unsigned s = 0; s < 3; ++s) {
            LinearCombination atom;
            atom.conductor = 3;
            atom.terms.push_back(CombinationTerm{0, ingest(vec), s, Cyclo::one(3)});
            basis.push_back(std::move(atom));
        }
    }
    return basis;
}

LinearCombination prime_detector_quadratic() {
    LinearCombination comb;
    comb.conductor = 1;
    comb.terms.push_back(rational_term(1, Rational(1), {1}, 2));
    comb.terms.push_back(rational_term(1, Rational(-3), {1}, 1));
    comb.terms.push_back(rational_term(1, Rational(2), {1}, 0));
    comb.terms.push_back(rational_term(1, Rational(-8), {1, 1}, 0));
    return comb;
}

LinearCombination prime_detector_psi1() {
    LinearCombination comb;
    comb.conductor = 1;
    comb.terms.push_back(rational_term(1, Rational(63), {2, 2}));
    comb.terms.push_back(rational_term(1, Rational(-12), {3, 0}));
    comb.terms.push_back(rational_term(1, Rational(-39), {3, 1}));
    comb.terms.push_back(rational_term(1, Rational(-12), {1, 3}));
    comb.terms.push_back(rational_term(1, Rational(80), {1, 1, 1}));
    comb.terms.push_back(rational_term(1, Rational(-12), {2, 0, 1}));
    comb.terms.push_back(rational_term(1, Rational(12), {2, 1, 0}));
    comb.terms.push_back(rational_term(1, Rational(12), {3, 0, 0}));
    return comb;
}

namespace {

AppendixReport compare_with_form(const LinearCombination& table,
                                 const QSeries<Rational>& form,
                                 std::size_t max_n) {
    const unsigned t = table.conductor;
    const auto eval = evaluate_combination(table, max_n);
    AppendixReport report;
    report.equal = true;
    for (std::size_t n = 2; n <= max_n; ++n) {
        if (eval[n].is_zero()) report.zero_set.push_back(n);
        if (report.equal && eval[n] != Cyclo::from_rational(t, form[n])) {
            report.equal = false;
            report.first_mismatch = n;
            report.expected_at_mismatch = to_string(form[n]);
            if (eval[n].is_rational()) {
                report.actual_at_mismatch = to_string(eval[n].rational_part());
            } else {
                report.actual_at_mismatch = "(non-rational cyclotomic value)";
            }
        }
    }
    if (max_n >= 1) {
        report.n1_equal = (eval[1] == Cyclo::from_rational(t, form[1]));
        report.n1_expected = to_string(form[1]);
        report.n1_actual = eval[1].is_rational()
                               ? to_string(eval[1].rational_part())
                               : std::string("(non-rational cyclotomic value)");
    }
    return report;
}

}  // namespace

AppendixReport verify_gstar(std::size_t max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_gstar: max_n must be >= 2");
    const DetectorParams params{1, 3, {}, {}};
    return compare_with_form(published_cube_expression(), build_g(params, max_n), max_n);
}

AppendixReport verify_fstar(std::size_t max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_fstar: max_n must be >= 2");
    const DetectorParams params{1, 3, 1, 3};
    return compare_with_form(published_ap_expression(), build_f(params, max_n), max_n);
}

}  // namespace mahon

#include "shiftedkeys/fixtures.hpp"

namespace shiftedkeys::fixtures {

const Poly& groth_o_2143() {
    static const Poly p = Poly::parse(
        "4*x1*x3 + 4*x1*x2 + 4*x1^2 + 2*b*x1*x3^2 + 8*b*x1*x2*x3 + 2*b*x1*x2^2 + 10*b*x1^2*x3 + "
        "10*b*x1^2*x2 + 4*b*x1^3 + 4*b^2*x1*x2*x3^2 + 4*b^2*x1*x2^2*x3 + 5*b^2*x1^2*x3^2 + "
        "20*b^2*x1^2*x2*x3 + 5*b^2*x1^2*x2^2 + 8*b^2*x1^3*x3 + 8*b^2*x1^3*x2 + b^2*x1^4 + "
        "2*b^3*x1*x2^2*x3^2 + 10*b^3*x1^2*x2*x3^2 + 10*b^3*x1^2*x2^2*x3 + 4*b^3*x1^3*x3^2 + "
        "16*b^3*x1^3*x2*x3 + 4*b^3*x1^3*x2^2 + 2*b^3*x1^4*x3 + 2*b^3*x1^4*x2 + 5*b^4*x1^2*x2^2*x3^2 + "
        "8*b^4*x1^3*x2*x3^2 + 8*b^4*x1^3*x2^2*x3 + b^4*x1^4*x3^2 + 4*b^4*x1^4*x2*x3 + b^4*x1^4*x2^2 + "
        "4*b^5*x1^3*x2^2*x3^2 + 2*b^5*x1^4*x2*x3^2 + 2*b^5*x1^4*x2^2*x3 + b^6*x1^4*x2^2*x3^2");
    return p;
}

const std::vector<std::pair<std::string, std::string>>& groth_o_2143_expansion() {
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"2143", "4"},    {"21534", "2*b"},  {"2341", "2*b"},   {"23514", "2*b^2"}, {"3142", "4*b"},
        {"31524", "3*b^2"}, {"3241", "3*b^2"}, {"32514", "3*b^3"}, {"4123", "2*b"},   {"4132", "3*b^2"},
        {"41523", "b^3"},  {"4231", "b^3"},   {"42513", "b^4"},  {"51234", "b^2"},   {"51324", "2*b^3"},
        {"51423", "b^4"},  {"52314", "b^4"},  {"52413", "b^5"},
    };
    return rows;
}

const std::vector<std::string>& pkey_table_rows() {
    static const std::vector<std::string> rows = {
        "\\kappa^{P}_{\\emptyset} = \\kappa_{\\emptyset}",
        "\\kappa^{P}_{22} = \\kappa_{01}",
        "\\kappa^{P}_{311} = \\kappa_{011} + \\kappa_{2}",
        "\\kappa^{P}_{333} = \\kappa_{012}",
        "\\kappa^{P}_{4111} = \\kappa_{0111} + \\kappa_{2001} + \\kappa_{3}",
        "\\kappa^{P}_{4331} = \\kappa_{0121} + \\kappa_{202} + \\kappa_{301}",
        "\\kappa^{P}_{51111} = \\kappa_{01111} + \\kappa_{20011} + \\kappa_{30001} + \\kappa_{4}",
        "\\kappa^{P}_{4422} = \\kappa_{0122} + \\kappa_{0311} + \\kappa_{23}",
        "\\kappa^{P}_{53311} = \\kappa_{01211} + \\kappa_{20201} + \\kappa_{30101} + \\kappa_{302} + \\kappa_{401}",
        "\\kappa^{P}_{611111} = \\kappa_{011111} + \\kappa_{200111} + \\kappa_{300011} + \\kappa_{400001} + \\kappa_{5}",
        "\\kappa^{P}_{4444} = \\kappa_{0123}",
        "\\kappa^{P}_{54221} = \\kappa_{01221} + \\kappa_{03111} + \\kappa_{2022} + \\kappa_{23001} + \\kappa_{3012} + \\kappa_{33} + \\kappa_{4011} + \\kappa_{42}",
        "\\kappa^{P}_{633111} = \\kappa_{012111} + \\kappa_{202011} + \\kappa_{301011} + \\kappa_{302001} + \\kappa_{401001} + \\kappa_{402} + \\kappa_{501}",
        "\\kappa^{P}_{7111111} = \\kappa_{0111111} + \\kappa_{2001111} + \\kappa_{3000111} + \\kappa_{4000011} + \\kappa_{5000001} + \\kappa_{6}",
    };
    return rows;
}

const std::vector<std::string>& qkey_table_rows() {
    static const std::vector<std::string> rows = {
        "\\kappa^{Q}_{\\emptyset} = \\kappa_{\\emptyset}",
        "\\kappa^{Q}_{1} = 2\\kappa_{1}",
        "\\kappa^{Q}_{21} = 2(\\kappa_{11} + \\kappa_{2})",
        "\\kappa^{Q}_{22} = 4\\kappa_{12}",
        "\\kappa^{Q}_{311} = 2(\\kappa_{111} + \\kappa_{201} + \\kappa_{3})",
        "\\kappa^{Q}_{321} = 4(\\kappa_{121} + \\kappa_{22} + \\kappa_{31})",
        "\\kappa^{Q}_{4111} = 2(\\kappa_{1111} + \\kappa_{2011} + \\kappa_{3001} + \\kappa_{4})",
        "\\kappa^{Q}_{332} = 4(\\kappa_{122} + \\kappa_{131} + \\kappa_{23})",
        "\\kappa^{Q}_{4211} = 4(\\kappa_{1211} + \\kappa_{2201} + \\kappa_{3101} + \\kappa_{32} + \\kappa_{41})",
        "\\kappa^{Q}_{51111} = 2(\\kappa_{11111} + \\kappa_{20111} + \\kappa_{30011} + \\kappa_{40001} + \\kappa_{5})",
        "\\kappa^{Q}_{333} = 8\\kappa_{123}",
        "\\kappa^{Q}_{4321} = 4(\\kappa_{1221} + \\kappa_{1311} + \\kappa_{222} + \\kappa_{2301} + \\kappa_{312} + \\kappa_{33} + \\kappa_{411} + \\kappa_{42})",
        "\\kappa^{Q}_{52111} = 4(\\kappa_{12111} + \\kappa_{22011} + \\kappa_{31011} + \\kappa_{32001} + \\kappa_{41001} + \\kappa_{42} + \\kappa_{51})",
        "\\kappa^{Q}_{611111} = 2(\\kappa_{111111} + \\kappa_{201111} + \\kappa_{300111} + \\kappa_{400011} + \\kappa_{500001} + \\kappa_{6})",
    };
    return rows;
}

} // namespace shiftedkeys::fixtures

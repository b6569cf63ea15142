#include "isingff/fixtures.hpp"

namespace isingff {

// Reference tables, one per (n, N). Entries list the lower-order admixtures
// (K) and the coefficient polynomials (C m) of F_N^(n-m) F_(N+1)^m, exactly
// as factored in the source tables. Cores in braces are descending and
// palindromic; every row is re-derived independently by the construction and
// the integral expansion in the test suites.
const std::string& fixtures_text() {
    static const std::string text = R"corpus(
table 2 0
C 1 + 1/2^2 t {1}
end

table 2 1
K 0 + 1/2
C 0 - 1/2^2 (t+1) {2,1,2}
C 1 + 3^2/2^5 t {4,5,4}
C 2 - 3^4/2^7 t^2 (t+1)
end

table 2 2
K 0 + 1
C 0 - 1/2^6 (t+1) {64,16,99,16,64}
C 1 + 5^2/2^8*3 t {64,88,105,88,64}
C 2 - 5^4/2^7*3^2 t^2 (t+1) {2,1,2}
end

table 2 3
K 0 + 3/2
C 0 - 1/2^7*3 (t+1) {576,96,730,425,730,96,576}
C 1 + 7^2/2^12*3 t {768,928,1240,1455,1240,928,768}
C 2 - 7^4/2^15*3 t^2 (t+1) {64,16,99,16,64}
end

table 3 0
K 0 + 1/2*3
C 0 - 1/2*3 (1+t)
C 1 + 1/2^2 t {1}
end

table 3 1
K 0 + 2/3
C 0 - 1/2^3*3 (1+t) {2^3,13,2^3}
C 1 + 3^2/2^6 t {8,15,8}
C 2 - 3^4/2^6 t^2 (t+1)
C 3 + 3^5/2^9 t^3 {1}
end

table 3 2
K 0 + 7/2*3
C 0 - 1/2^10*3 (1+t) {2^6*3*7,1136,3229,1136,1344}
C 1 + 5^2/2^11*3 t {2^5*3^2,596,859,596,2^5*3^2}
C 2 - 5^5/2^10*3^2 (t+1) {3,4,3} t^2
C 3 + 5^6/2^11*3^4 t^3 {3,8,3}
end

table 3 3
K 0 + 5/3
C 0 - 1/2^11*3^4 (t+1) {2^7*3^3*5^2,49680,153306,160427,153306,49680,2^7*3^3*5^2}
C 1 + 7^2/2^16*3^3 t {2^10*3^2*5,79200,128104,168593,128104,79200,2^10*3^2*5}
C 2 - 7^4/2^16*3^3 (t+1) t^2 {2^4*3^2*5,670,1763,670,2^4*3^2*5}
C 3 + 7^6/2^21*3^4 t^3 {2^6*5,740,1407,740,2^6*5}
end

table 3 4
K 0 + 13/6
C 0 - 1/2^22*3 (t+1) {2^14*5*7*13,3254272,11474624,8672032,20423231,8672032,11474624,3254272,2^14*5*7*13}
C 1 + 3^3/2^23*5 t {2^12*3*5^2*7,3334912,4845120,7068720,8865649,7068720,4845120,3334912,2^12*3*5^2*7}
C 2 - 3^6/2^20*5^2 t^2 (t+1) {2^4*3^2*5*7^2,26292,69377,78580,69377,26292,2^4*3^2*5*7^2}
C 3 + 3^8/2^21*5^3 t^3 {2^3*3^3*5*7,2^3*3^3*7*11,28413,46432,28413,2^3*3^3*7*11,2^3*3^3*5*7}
end

table 4 0
K 1 + 1/3
C 0 - 1/2^2*3 t {1}
C 2 + 1/2^5 t^2 {1}
end

table 4 1
K 0 - 1/2^3*3
K 1 + 5/2*3
C 0 + 1/2^5*3 {4,4,15,4,4} (t+1)^2
C 1 - 3/2^7 t (t+1) {8,18,35,18,8}
C 2 + 3^4/2^11 t^2 {8,28,45,28,8}
C 3 - 3^5/2^12 t^3 (t+1) {4,11,4}
C 4 + 3^7/2^15 t^4 {1,4,1}
end

table 4 2
K 0 - 1/3
K 1 + 2^2/3
C 0 + 1/2^14*3 {2^14,40960,84480,136640,176180,201075,176180,136640,84480,40960,2^14}
C 1 - 5^2/2^14*3^2 t (t+1) {2^13,13312,29504,36320,45337,36320,29504,13312,2^13}
C 2 + 5^4/2^17*3^2 t^2 {2^12,11264,21760,31576,36209,31576,21760,11264,2^12}
C 3 - 5^6/2^15*3^4 t^3 (t+1) {2^8,480,906,979,906,480,2^8}
C 4 + 5^8/2^17*3^5 t^4 {2^5,96,177,224,177,96,2^5}
end

table 4 3
K 0 - 7/2^3
K 1 + 11/2*3
C 0 + 1/2^16*3^4 {2^13*3^4*7,10838016,19643904,34169856,50403584,62791680,73309425,79935700,73309425,62791680,50403584,34169856,19643904,10838016,2^13*3^4*7}
C 1 - 7^2/2^19*3^4 t (t+1) {2^14*3^3*7,4257792,9547776,13813120,19341120,21399090,24976435,21399090,19341120,13813120,9547776,4257792,2^14*3^3*7}
C 2 + 7^4/2^25*3^3 t^2 {2^15*3^2*7,4988928,9680384,15992320,21863120,26325960,28527015,26325960,21863120,15992320,9680384,4988928,2^15*3^2*7}
C 3 - 7^6/2^27*3^4 t^3 (t+1) {2^14*3*7,501760,1191680,1548640,2065400,2169745,2065400,1548640,1191680,501760,2^14*3*7}
C 4 + 7^8/2^31*3^4 t^4 {2^12*7,71680,147840,235040,299555,339180,299555,235040,147840,71680,2^12*7}
end

table 5 1
K 0 - 2^2/5
K 1 + 1
C 0 + 1/2^6*3*5 (t+1)^2 {2^6,136,159,136,2^6}
C 1 - 3/2^8 t (t+1) {2^5,80,99,80,2^5}
C 2 + 3^3/2^12 t^2 {2^7,368,483,368,2^7}
C 3 - 3^5/2^10 t^3 (t+1) {4,5,4}
C 4 + 3^7/2^15 t^4 {8,13,8}
C 5 - 3^9/2^15*5 (t+1) t^5
end

table 5 2
K 0 - 137/2^3*5
K 1 + 3/2
C 0 + 1/2^18*3*5 {8,7,8} {2^9*3*61,241856,508200,708609,780244,708609,508200,241856,2^9*3*61}
C 1 - 5^2/2^18*3^2 t (t+1) {92160,239360,540576,723924,868861,723924,540576,239360,92160}
C 2 + 5^4/2^20*3^3 t^2 {90624,338816,743304,1122432,1278697,1122432,743304,338816,90624}
C 3 - 5^6/2^17*3^4 t^3 (t+1) {1392,4010,6983,8136,6983,4010,1392}
C 4 + 5^8/2^20*3^5 t^4 {684,2752,5161,6240,5161,2752,684}
C 5 - 5^9/2^19*3^6 t^5 (t+1) {42,133,167,133,42}
end

table 5 3
K 0 - 127/3*5
K 1 + 2
C 0 + 1/2^20*3^5*5 {2^16*3^4*5*17,1377976320,3016452096,5930641920,9308313280,12328157240,14834544515,15849843292,14834544515,12328157240,9308313280,5930641920,3016452096,1377976320,2^16*3^4*5*17}
C 1 - 7^2/2^22*3^5 t (t+1) {2^19*3^3*5,151511040,351000576,605214208,835692208,1025976166,1112168875,1025976166,835692208,605214208,351000576,151511040,2^19*3^3*5}
C 2 + 7^4/2^29*3^5 t^2 {2^18*3^3*5^2,572129280,1334317056,2446757888,3545541888,4425343776,4784608975,4425343776,3545541888,2446757888,1334317056,572129280,2^18*3^3*5^2}
C 3 - 7^6/2^27*3^5 t^3 (t+1) {2^13*3*5*7,2007040,4885888,7228048,9666130,10423545,9666130,7228048,4885888,2007040,2^13*3*5*7}
C 4 + 7^8/2^34*3^5 t^4 {2^14*5*13,3665920,9078784,15185664,20375540,22605185,20375540,15185664,9078784,3665920,2^14*5*13}
C 5 - 7^10/2^35*3^5*5 t^5 (t+1) {2^13*5,104960,267136,319904,436441,319904,267136,104960,2^13*5}
end
)corpus";
    return text;
}

} // namespace isingff

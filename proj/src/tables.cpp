#include "hulthen/tables.hpp"

#include <cstdlib>
#include <limits>

namespace hulthen::cli {

namespace {

constexpr double absent = std::numeric_limits<double>::quiet_NaN();

// Column bits for misprint_mask.
constexpr unsigned nu0 = 1u, nu12 = 2u, susy0 = 4u, susy12 = 8u;

// Printed values kept exactly as published. Beyond the two well-known defects
// (the 2p delta=0.200 C0=0 magnitude and the 4p delta=0.100 SUSY C0=0 sign),
// an audit against the closed form shows the 3p delta=0.075 C0=0 cell carries
// an extra digit and every d/f/g row simply repeats the p-row values in the
// C0 = 1/12 columns, where the l(l+1) C0 shift should differ.
constexpr LevelRow level_rows[] = {
    {"2p", 0, 1, 0.025, {"-0.1128125", "-0.1127604", "-0.1128125", "-0.1127604"}, 0},
    {"2p", 0, 1, 0.050, {"-0.1012500", "-0.10104166", "-0.1012500", "-0.10104166"}, 0},
    {"2p", 0, 1, 0.075, {"-0.0903125", "-0.08984375", "-0.0903125", "-0.08984375"}, 0},
    {"2p", 0, 1, 0.100, {"-0.080000", "-0.07916666", "-0.080000", "-0.07916666"}, 0},
    {"2p", 0, 1, 0.150, {"-0.0612500", "-0.059375", "-0.0612500", "-0.059375"}, 0},
    {"2p", 0, 1, 0.200, {"-0.45000", "-0.0416666", "-0.45000", "-0.0416666"}, nu0 | susy0},
    {"2p", 0, 1, 0.250, {"-0.0312500", "-0.02604166", "-0.0312500", "-0.02604166"}, 0},
    {"2p", 0, 1, 0.300, {"-0.02000", "-0.012500", "-0.02000", "-0.012500"}, 0},
    {"2p", 0, 1, 0.350, {"-0.01125", "-0.00104166", "-0.01125", "-0.00104166"}, 0},
    {"3p", 1, 1, 0.025, {"-0.04375868", "-0.04370659", "-0.04375868", "-0.04370659"}, 0},
    {"3p", 1, 1, 0.050, {"-0.03336805", "-0.03315972", "-0.03336805", "-0.03315972"}, 0},
    {"3p", 1, 1, 0.075, {"-0.02438737", "-0.0239149305", "-0.02438737", "-0.0239149305"},
     nu0 | susy0},
    {"3p", 1, 1, 0.100, {"-0.01680555", "-0.015972222", "-0.01680555", "-0.015972222"}, 0},
    {"3p", 1, 1, 0.150, {"-0.00586805", "-0.003993055", "-0.00586805", "-0.003993055"}, 0},
    {"3d", 0, 2, 0.025, {"-0.04375868", "-0.04370659", "-0.04375868", "-0.04370659"},
     nu12 | susy12},
    {"3d", 0, 2, 0.050, {"-0.03336805", "-0.03315972", "-0.03336805", "-0.03315972"},
     nu12 | susy12},
    {"3d", 0, 2, 0.075, {"-0.02438737", "-0.0239149305", "-0.02438737", "-0.0239149305"},
     nu0 | nu12 | susy0 | susy12},
    {"3d", 0, 2, 0.100, {"-0.01680555", "-0.015972222", "-0.01680555", "-0.015972222"},
     nu12 | susy12},
    {"3d", 0, 2, 0.150, {"-0.00586805", "-0.003993055", "-0.00586805", "-0.003993055"},
     nu12 | susy12},
    {"4p", 2, 1, 0.025, {"-0.02000", "-0.0199478", "-0.02000", "-0.0199478"}, 0},
    {"4p", 2, 1, 0.050, {"-0.01125", "-0.011041666", "-0.01125", "-0.011041666"}, 0},
    {"4p", 2, 1, 0.075, {"-0.00500", "-0.00453125", "-0.00500", "-0.00453125"}, 0},
    {"4p", 2, 1, 0.100, {"-0.00125", "-0.00041666", "0.00125", "-0.00041666"}, susy0},
    {"4d", 1, 2, 0.025, {"-0.02000", "-0.0199478", "-0.02000", "-0.0199478"}, nu12 | susy12},
    {"4d", 1, 2, 0.050, {"-0.01125", "-0.011041666", "-0.01125", "-0.011041666"},
     nu12 | susy12},
    {"4d", 1, 2, 0.075, {"-0.00500", "-0.00453125", "-0.00500", "-0.00453125"}, nu12 | susy12},
    {"4f", 0, 3, 0.025, {"-0.02000", "-0.0199478", "-0.02000", "-0.0199478"}, nu12 | susy12},
    {"4f", 0, 3, 0.050, {"-0.01125", "-0.011041666", "-0.01125", "-0.011041666"},
     nu12 | susy12},
    {"4f", 0, 3, 0.075, {"-0.00500", "-0.00453125", "-0.00500", "-0.00453125"}, nu12 | susy12},
    {"5p", 3, 1, 0.025, {"-0.009453125", "-0.009401", "-0.009453125", "-0.009401"}, 0},
    {"5p", 3, 1, 0.050, {"-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"}, 0},
    {"5d", 2, 2, 0.025, {"-0.009453125", "-0.009401", "-0.009453125", "-0.009401"},
     nu12 | susy12},
    {"5d", 2, 2, 0.050, {"-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"},
     nu12 | susy12},
    {"5f", 1, 3, 0.025, {"-0.009453125", "-0.009401", "-0.009453125", "-0.009401"},
     nu12 | susy12},
    {"5f", 1, 3, 0.050, {"-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"},
     nu12 | susy12},
    {"5g", 0, 4, 0.025, {"-0.009453125", "-0.009401", "-0.009453125", "-0.009401"},
     nu12 | susy12},
    {"5g", 0, 4, 0.050, {"-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"},
     nu12 | susy12},
    {"6p", 4, 1, 0.025, {"-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"}, 0},
    {"6d", 3, 2, 0.025, {"-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"},
     nu12 | susy12},
    {"6g", 1, 4, 0.025, {"-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"},
     nu12 | susy12},
};

// Published magnitudes; the sources print positive numbers. The variational
// column stops after the 4f rows.
constexpr ReferenceRow reference_rows[] = {
    {"2p", 0, 1, 0.025, 0.1128125, 0.1127605, 0.1127605, 0.1127605},
    {"2p", 0, 1, 0.050, 0.1012500, 0.1010425, 0.1010425, 0.1010425},
    {"2p", 0, 1, 0.075, 0.0903125, 0.0898478, 0.0898478, 0.0898478},
    {"2p", 0, 1, 0.100, 0.0800000, 0.0791794, 0.0791794, 0.0791794},
    {"2p", 0, 1, 0.150, 0.0612500, 0.0594415, 0.0594415, 0.0594415},
    {"2p", 0, 1, 0.200, 0.450000, 0.0418854, 0.0418860, 0.0418860},
    {"2p", 0, 1, 0.250, 0.0312500, 0.0266060, 0.0266111, 0.0266108},
    {"2p", 0, 1, 0.300, 0.0200000, 0.0137596, 0.0137900, 0.0137878},
    {"2p", 0, 1, 0.350, 0.0112500, 0.0036146, 0.0037931, 0.0037734},
    {"3p", 1, 1, 0.025, 0.0437590, 0.0437068, 0.0437069, 0.0437069},
    {"3p", 1, 1, 0.050, 0.0333681, 0.0331632, 0.0331645, 0.0331645},
    {"3p", 1, 1, 0.075, 0.0243837, 0.0239331, 0.0239397, 0.0239397},
    {"3p", 1, 1, 0.100, 0.0168056, 0.0160326, 0.0160537, 0.0160537},
    {"3p", 1, 1, 0.150, 0.00586811, 0.0043599, 0.0044663, 0.0044660},
    {"3d", 0, 2, 0.025, 0.0437587, 0.0436030, 0.0436030, 0.0436030},
    {"3d", 0, 2, 0.050, 0.0333681, 0.0327532, 0.0327532, 0.0327532},
    {"3d", 0, 2, 0.075, 0.0243837, 0.0230306, 0.0230307, 0.0230307},
    {"3d", 0, 2, 0.100, 0.0168055, 0.0144832, 0.0144842, 0.0144842},
    {"3d", 0, 2, 0.150, 0.0058681, 0.0132820, 0.0013966, 0.0013894},
    {"4p", 2, 1, 0.025, 0.0200000, 0.0199480, 0.0199489, 0.0199489},
    {"4p", 2, 1, 0.050, 0.0112500, 0.0110430, 0.0110582, 0.0110582},
    {"4p", 2, 1, 0.075, 0.0050000, 0.0045385, 0.0046219, 0.0046219},
    {"4p", 2, 1, 0.100, 0.0012500, 0.0004434, 0.0007550, 0.0007532},
    {"4d", 1, 2, 0.025, 0.0200000, 0.0198460, 0.0198462, 0.0198462},
    {"4d", 1, 2, 0.050, 0.0112500, 0.0106609, 0.0106674, 0.0106674},
    {"4d", 1, 2, 0.075, 0.0050000, 0.0037916, 0.0038345, 0.0038344},
    {"4f", 0, 3, 0.025, 0.0200000, 0.0196911, 0.0196911, 0.0196911},
    {"4f", 0, 3, 0.050, 0.0112500, 0.0100618, 0.0100620, 0.0100620},
    {"4f", 0, 3, 0.075, 0.0050000, 0.0025468, 0.0025563, 0.0025557},
    {"5p", 3, 1, 0.025, 0.0094531, 0.0094011, 0.0094036, absent},
    {"5p", 3, 1, 0.050, 0.0028125, 0.0026058, 0.0026490, absent},
    {"5d", 2, 2, 0.025, 0.0094531, 0.0092977, 0.0093037, absent},
    {"5d", 2, 2, 0.050, 0.0028125, 0.0022044, 0.0023131, absent},
    {"5f", 1, 3, 0.025, 0.0094531, 0.0091507, 0.0091521, absent},
    {"5f", 1, 3, 0.050, 0.0028125, 0.0017421, 0.0017835, absent},
    {"5g", 0, 4, 0.025, 0.0094531, 0.0089465, 0.0089465, absent},
    {"5g", 0, 4, 0.050, 0.0028125, 0.0010664, 0.0010159, absent},
    {"6p", 4, 1, 0.025, 0.0042014, 0.0041493, 0.0041548, absent},
    {"6d", 3, 2, 0.025, 0.0042014, 0.0040452, 0.0040606, absent},
    {"6f", 2, 3, 0.025, 0.0042014, 0.0038901, 0.0039168, absent},
    {"6g", 1, 4, 0.025, 0.0042014, 0.0036943, 0.0037201, absent},
};

}  // namespace

const char* level_column_name(int col) {
  switch (col) {
    case 0: return "nu_c0_0";
    case 1: return "nu_c0_1_12";
    case 2: return "susy_c0_0";
    case 3: return "susy_c0_1_12";
  }
  return "?";
}

const char* reference_column_name(int col) {
  switch (col) {
    case 0: return "aim";
    case 1: return "susy_ref";
    case 2: return "numerical";
    case 3: return "variational";
  }
  return "?";
}

std::span<const LevelRow> analytic_levels() { return level_rows; }

std::span<const ReferenceRow> published_reference() { return reference_rows; }

double parse_printed(const char* text) { return std::strtod(text, nullptr); }

}  // namespace hulthen::cli

#include "eisen/reference_values.hpp"

namespace eisen {

// a_c and |b_c| for the eta family, c = 1..120.
const std::array<TableRow, 120>& table_one() {
  static const std::array<TableRow, 120> rows = {{
      {1, 1, 1.00000000000000},
      {2, 3, 1.73205080756888},
      {3, 8, 3.75877048314363},
      {4, 6, 2.44948974278318},
      {5, 16, 5.89024980807019},
      {6, 0, 0.000000000000000},
      {7, 30, 10.6212055278435},
      {8, 24, 8.74368977583278},
      {9, 24, 8.46211760746388},
      {10, 24, 8.50885617465906},
      {11, 34, 8.06373872165313},
      {12, 24, 6.90183932530257},
      {13, 60, 17.6625147140923},
      {14, 18, 4.51004461341033},
      {15, 32, 10.9523800561763},
      {16, 36, 10.5908400750848},
      {17, 100, 28.8451266799323},
      {18, 48, 11.6357787307730},
      {19, 90, 22.6680074518870},
      {20, 24, 8.62256402186157},
      {21, 72, 21.5754050648131},
      {22, 54, 12.8238722222672},
      {23, 118, 31.2713176779699},
      {24, 24, 4.68062625874532},
      {25, 92, 23.0405284170969},
      {26, 84, 23.6003748220743},
      {27, 120, 32.1615253767701},
      {28, 60, 16.5743373851450},
      {29, 184, 47.9243293316807},
      {30, 72, 16.1604866258962},
      {31, 198, 52.2249030090458},
      {32, 84, 18.4576382654540},
      {33, 104, 23.1126468409856},
      {34, 84, 21.3802759723862},
      {35, 96, 23.2788573806613},
      {36, 72, 18.0074606478609},
      {37, 180, 37.9144960695286},
      {38, 102, 25.8385873231311},
      {39, 144, 33.1989215841068},
      {40, 72, 12.0023106035007},
      {41, 268, 64.6571107195962},
      {42, 72, 20.0687840963522},
      {43, 306, 73.0570345250152},
      {44, 156, 35.5537710214148},
      {45, 120, 27.1680532695269},
      {46, 162, 38.2563920108131},
      {47, 334, 76.0785405490705},
      {48, 96, 22.2698637680974},
      {49, 234, 49.5345990909473},
      {50, 132, 31.3390062462300},
      {51, 128, 26.8051369832377},
      {52, 120, 28.2286705109218},
      {53, 304, 58.8064777885113},
      {54, 48, 13.3209735097928},
      {55, 328, 72.1117079402388},
      {56, 168, 38.8741356168516},
      {57, 240, 54.5982902795300},
      {58, 192, 43.9988770726292},
      {59, 370, 86.8139150720411},
      {60, 120, 23.3476708044070},
      {61, 396, 88.8088449383063},
      {62, 186, 37.1923900968198},
      {63, 192, 39.4977755536762},
      {64, 252, 65.9323483074285},
      {65, 336, 78.7891012360799},
      {66, 168, 36.1781508818000},
      {67, 426, 98.8288262449906},
      {68, 240, 52.2333340434603},
      {69, 272, 54.9017052415375},
      {70, 192, 35.1304032277211},
      {71, 358, 71.4349749764530},
      {72, 168, 41.9944276907149},
      {73, 456, 98.5821717496100},
      {74, 252, 53.8089795671028},
      {75, 376, 82.6327687606048},
      {76, 276, 57.9389308181890},
      {77, 396, 92.2328292717801},
      {78, 216, 42.1228698589956},
      {79, 534, 115.964839305033},
      {80, 216, 45.2715362547579},
      {81, 408, 85.1656851140978},
      {82, 252, 56.5973235931712},
      {83, 586, 117.037087585102},
      {84, 192, 34.9899263168499},
      {85, 448, 96.6076285872280},
      {86, 222, 45.5669196048687},
      {87, 344, 63.6184752024529},
      {88, 192, 40.2417450446403},
      {89, 700, 142.765142290188},
      {90, 96, 16.7365006938530},
      {91, 432, 90.9540326194120},
      {92, 276, 55.9590294683383},
      {93, 384, 78.9992542510420},
      {94, 234, 46.1408533394733},
      {95, 504, 101.308022987726},
      {96, 216, 45.3977923880827},
      {97, 672, 121.240085779400},
      {98, 318, 71.4261760057502},
      {99, 480, 105.327246473209},
      {100, 360, 69.3186466692249},
      {101, 784, 163.899681424127},
      {102, 240, 45.3783981921531},
      {103, 702, 141.046737147506},
      {104, 288, 54.0158720618784},
      {105, 432, 80.9717796948430},
      {106, 360, 67.3821144626558},
      {107, 706, 139.080897319654},
      {108, 264, 49.1275927376387},
      {109, 780, 158.620245756362},
      {110, 144, 27.2025670023814},
      {111, 576, 130.288464328520},
      {112, 408, 77.5058407028028},
      {113, 772, 153.976310942955},
      {114, 336, 75.1039529939772},
      {115, 688, 134.930035438987},
      {116, 408, 79.5199162732558},
      {117, 432, 87.0726283552659},
      {118, 390, 65.5233353417242},
      {119, 672, 123.549686340431},
      {120, 168, 40.9277382709894},
  }};
  return rows;
}

}  // namespace eisen

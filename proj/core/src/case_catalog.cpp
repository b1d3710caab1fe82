#include "kheight/tables.hpp"

#include "kheight/error.hpp"

#include <algorithm>

namespace kheight {

namespace {

struct RawRow {
  const char* table;
  int k;
  const char* case_id;
  long omega_B;
  long omega_boundary;
  const char* e_max;
};

// clang-format off
const RawRow kRows[] = {
    {"rect", 2, "rect", -1, -1, "1.225092"},
    {"rect", 3, "rect", -1, -1, "1.752678"},
    {"rect", 4, "rect", -1, -1, ">2.27"},
    {"hex", 2, "hex", 199, 729, "0.798658"},
    {"hex", 3, "hex", 340, 4096, "1.831905"},
    {"hex", 4, "hex", 481, 15625, "2.892857"},
    {"hex", 5, "hex", 622, 46656, "3.000000"},
    {"hex", 6, "hex", 763, 117649, "3.000000"},
    {"type1", 2, "1_3[1]", 15, 27, "0.727273"},
    {"type1", 2, "1_4[1]", 35, 81, "0.769231"},
    {"type1", 2, "1_5[1]", 83, 243, "0.790323"},
    {"type1", 2, "1_6[1]", 199, 729, "0.798658"},
    {"type1", 2, "1_7[1]", 479, 2187, "0.802228"},
    {"type1", 2, "1_8[1]", 1155, 6561, "0.803695"},
    {"type1", 2, "1_9[1]", 2787, 19683, "0.804306"},
    {"type1", 2, "1_10[1]", 6727, 59049, "0.804559"},
    {"type1", 2, "1_3[1,2]", 15, 9, "1.327273"},
    {"type1", 2, "1_4[1,2]", 35, 27, "1.384615"},
    {"type1", 2, "1_4[1,3]", 35, 27, "1.435897"},
    {"type1", 2, "1_5[1,2]", 83, 81, "1.415323"},
    {"type1", 2, "1_5[1,3]", 83, 81, "1.540323"},
    {"type1", 2, "1_6[1,2]", 199, 243, "1.426863"},
    {"type1", 2, "1_6[1,3]", 199, 243, "1.574777"},
    {"type1", 2, "1_6[1,4]", 199, 243, "1.552082"},
    {"type1", 2, "1_7[1,2]", 479, 729, "1.431858"},
    {"type1", 2, "1_7[1,3]", 479, 729, "1.591048"},
    {"type1", 2, "1_7[1,4]", 479, 729, "1.579371"},
    {"type1", 2, "1_8[1,2]", 1155, 2187, "1.433892"},
    {"type1", 2, "1_8[1,3]", 1155, 2187, "1.597510"},
    {"type1", 2, "1_8[1,4]", 1155, 2187, "1.592294"},
    {"type1", 2, "1_8[1,5]", 1155, 2187, "1.586912"},
    {"type1", 2, "1_9[1,2]", 2787, 6561, "1.434741"},
    {"type1", 2, "1_9[1,3]", 2787, 6561, "1.600246"},
    {"type1", 2, "1_9[1,4]", 2787, 6561, "1.597410"},
    {"type1", 2, "1_9[1,5]", 2787, 6561, "1.598880"},
    {"type1", 2, "1_10[1,2]", 6727, 19683, "1.435092"},
    {"type1", 2, "1_10[1,3]", 6727, 19683, "1.601372"},
    {"type1", 2, "1_10[1,4]", 6727, 19683, "1.599577"},
    {"type1", 2, "1_10[1,5]", 6727, 19683, "1.603594"},
    {"type1", 2, "1_10[1,6]", 6727, 19683, "1.600502"},
    {"type1", 2, "1_3[1,2,3]", 15, 3, "1.500000"},
    {"type1", 2, "1_4[1,2,3]", 35, 9, "1.869231"},
    {"type1", 2, "1_5[1,2,3]", 83, 27, "1.905707"},
    {"type1", 2, "1_5[1,2,4]", 83, 27, "2.051192"},
    {"type1", 2, "1_6[1,2,3]", 199, 81, "1.923658"},
    {"type1", 2, "1_6[1,2,4]", 199, 81, "2.150510"},
    {"type1", 2, "1_6[1,3,5]", 199, 81, "2.150510"},
    {"type1", 2, "1_7[1,2,3]", 479, 243, "1.930434"},
    {"type1", 2, "1_7[1,2,4]", 479, 243, "2.189825"},
    {"type1", 2, "1_7[1,2,5]", 479, 243, "2.159796"},
    {"type1", 2, "1_7[1,3,5]", 479, 243, "2.235299"},
    {"type1", 2, "1_8[1,2,3]", 1155, 729, "1.933325"},
    {"type1", 2, "1_8[1,2,4]", 1155, 729, "2.206921"},
    {"type1", 2, "1_8[1,2,5]", 1155, 729, "2.195117"},
    {"type1", 2, "1_8[1,3,5]", 1155, 729, "2.264221"},
    {"type1", 2, "1_8[1,3,6]", 1155, 729, "2.315401"},
    {"type1", 2, "1_9[1,2,3]", 2787, 2187, "1.935014"},
    {"type1", 2, "1_9[1,2,4]", 2787, 2187, "2.213945"},
    {"type1", 2, "1_9[1,2,5]", 2787, 2187, "2.209698"},
    {"type1", 2, "1_9[1,2,6]", 2787, 2187, "2.207776"},
    {"type1", 2, "1_9[1,3,5]", 2787, 2187, "2.277630"},
    {"type1", 2, "1_9[1,3,6]", 2787, 2187, "2.342016"},
    {"type1", 2, "1_9[1,4,7]", 2787, 2187, "2.334910"},
    {"type1", 2, "1_10[1,2,3]", 6727, 6561, "1.936494"},
    {"type1", 2, "1_10[1,2,4]", 6727, 6561, "2.216879"},
    {"type1", 2, "1_10[1,2,5]", 6727, 6561, "2.215781"},
    {"type1", 2, "1_10[1,2,6]", 6727, 6561, "2.222741"},
    {"type1", 2, "1_10[1,3,5]", 6727, 6561, "2.282993"},
    {"type1", 2, "1_10[1,3,6]", 6727, 6561, "2.354501"},
    {"type1", 2, "1_10[1,3,7]", 6727, 6561, "2.367241"},
    {"type1", 2, "1_10[1,4,7]", 6727, 6561, "2.363205"},
    {"type1", 3, "1_3[1]", 22, 64, "1.600000"},
    {"type1", 3, "1_4[1]", 54, 256, "1.789474"},
    {"type1", 3, "1_5[1]", 134, 1024, "1.804348"},
    {"type1", 3, "1_6[1]", 340, 4096, "1.831905"},
    {"type1", 3, "1_7[1]", 872, 16384, "1.840096"},
    {"type1", 3, "1_8[1]", 2254, 65536, "1.845752"},
    {"type1", 3, "1_9[1]", 5854, 262144, "1.847792"},
    {"type1", 3, "1_10[1]", 15250, 1048576, "1.848706"},
    {"type1", 3, "1_3[1,2]", 22, 16, "2.000000"},
    {"type1", 3, "1_4[1,2]", 54, 64, "2.142857"},
    {"type1", 3, "1_4[1,3]", 54, 64, "2.000000"},
    {"type1", 3, "1_5[1,2]", 134, 256, "2.546154"},
    {"type1", 3, "1_5[1,3]", 134, 256, "2.615385"},
    {"type1", 3, "1_6[1,2]", 340, 1024, "2.577465"},
    {"type1", 3, "1_6[1,3]", 340, 1024, "2.826087"},
    {"type1", 3, "1_6[1,4]", 340, 1024, "3.216327"},
    {"type1", 3, "1_7[1,2]", 872, 4096, "2.624362"},
    {"type1", 3, "1_7[1,3]", 872, 4096, "2.818584"},
    {"type1", 3, "1_7[1,4]", 872, 4096, "3.324534"},
    {"type1", 3, "1_8[1,2]", 2254, 16384, "2.635011"},
    {"type1", 3, "1_8[1,3]", 2254, 16384, "2.856485"},
    {"type1", 3, "1_8[1,4]", 2254, 16384, "3.403828"},
    {"type1", 3, "1_8[1,5]", 2254, 16384, "3.633238"},
    {"type1", 3, "1_9[1,2]", 5854, 65536, "2.641197"},
    {"type1", 3, "1_9[1,3]", 5854, 65536, "2.863505"},
    {"type1", 3, "1_9[1,4]", 5854, 65536, "3.426333"},
    {"type1", 3, "1_9[1,5]", 5854, 65536, "3.626901"},
    {"type1", 3, "1_10[1,2]", 15250, 262144, "2.643553"},
    {"type1", 3, "1_10[1,3]", 15250, 262144, "2.868846"},
    {"type1", 3, "1_10[1,4]", 15250, 262144, "3.438075"},
    {"type1", 3, "1_10[1,5]", 15250, 262144, "3.651213"},
    {"type1", 3, "1_10[1,6]", 15250, 262144, "3.620821"},
    {"type1", 3, "1_3[1,2,3]", 22, 4, "3.000000"},
    {"type1", 3, "1_4[1,2,3]", 54, 16, "2.964286"},
    {"type1", 3, "1_5[1,2,3]", 134, 64, "2.966667"},
    {"type1", 3, "1_5[1,2,4]", 134, 64, "2.982759"},
    {"type1", 3, "1_6[1,2,3]", 340, 256, "3.110112"},
    {"type1", 3, "1_6[1,2,4]", 340, 256, "3.200000"},
    {"type1", 3, "1_6[1,3,5]", 340, 256, "3.000000"},
    {"type1", 3, "1_7[1,2,3]", 872, 1024, "3.164596"},
    {"type1", 3, "1_7[1,2,4]", 872, 1024, "3.525963"},
    {"type1", 3, "1_7[1,2,5]", 872, 1024, "3.871287"},
    {"type1", 3, "1_7[1,3,5]", 872, 1024, "3.617647"},
    {"type1", 3, "1_8[1,2,3]", 2254, 4096, "3.194189"},
    {"type1", 3, "1_8[1,2,4]", 2254, 4096, "3.535367"},
    {"type1", 3, "1_8[1,2,5]", 2254, 4096, "4.042553"},
    {"type1", 3, "1_8[1,3,5]", 2254, 4096, "3.831169"},
    {"type1", 3, "1_8[1,3,6]", 2254, 4096, "4.222115"},
    {"type1", 3, "1_9[1,2,3]", 5854, 16384, "3.202434"},
    {"type1", 3, "1_9[1,2,4]", 5854, 16384, "3.578054"},
    {"type1", 3, "1_9[1,2,5]", 5854, 16384, "4.114039"},
    {"type1", 3, "1_9[1,2,6]", 5854, 16384, "4.387895"},
    {"type1", 3, "1_9[1,3,5]", 5854, 16384, "3.820580"},
    {"type1", 3, "1_9[1,3,6]", 5854, 16384, "4.332220"},
    {"type1", 3, "1_9[1,4,7]", 5854, 16384, "4.846281"},
    {"type1", 3, "1_10[1,2,3]", 15250, 65536, "3.206722"},
    {"type1", 3, "1_10[1,2,4]", 15250, 65536, "3.585695"},
    {"type1", 3, "1_10[1,2,5]", 15250, 65536, "4.139175"},
    {"type1", 3, "1_10[1,2,6]", 15250, 65536, "4.390973"},
    {"type1", 3, "1_10[1,3,5]", 15250, 65536, "3.859528"},
    {"type1", 3, "1_10[1,3,6]", 15250, 65536, "4.408656"},
    {"type1", 3, "1_10[1,3,7]", 15250, 65536, "4.648191"},
    {"type1", 3, "1_10[1,4,7]", 15250, 65536, "5.051252"},
    {"type2", 2, "2[1]", 1393, 59049, "0.706599"},
    {"type2", 2, "2[2]", 1393, 59049, "0.782333"},
    {"type2", 2, "2[3]", 1393, 59049, "0.792046"},
    {"type2", 2, "2[4]", 1393, 59049, "0.797591"},
    {"type2", 2, "2[1,2]", 1393, 19683, "1.412481"},
    {"type2", 2, "2[1,3]", 1393, 19683, "1.411765"},
    {"type2", 2, "2[1,4]", 1393, 19683, "1.477771"},
    {"type2", 2, "2[1,5]", 1393, 19683, "1.491765"},
    {"type2", 2, "2[1,6]", 1393, 19683, "1.493956"},
    {"type2", 2, "2[1,7]", 1393, 19683, "1.486392"},
    {"type2", 2, "2[1,8]", 1393, 19683, "1.412481"},
    {"type2", 2, "2[2,3]", 1393, 19683, "1.411765"},
    {"type2", 2, "2[2,4]", 1393, 19683, "1.473715"},
    {"type2", 2, "2[2,5]", 1393, 19683, "1.541176"},
    {"type2", 2, "2[2,6]", 1393, 19683, "1.557661"},
    {"type2", 2, "2[2,7]", 1393, 19683, "1.557944"},
    {"type2", 2, "2[3,4]", 1393, 19683, "1.411765"},
    {"type2", 2, "2[3,5]", 1393, 19683, "1.540578"},
    {"type2", 2, "2[3,6]", 1393, 19683, "1.544729"},
    {"type2", 2, "2[4,5]", 1393, 19683, "1.417639"},
    {"type2", 2, "2[1,2,3]", 1393, 6561, "1.911765"},
    {"type2", 2, "2[1,2,4]", 1393, 6561, "2.065098"},
    {"type2", 2, "2[1,2,5]", 1393, 6561, "2.152505"},
    {"type2", 2, "2[1,2,6]", 1393, 6561, "2.180995"},
    {"type2", 2, "2[1,2,7]", 1393, 6561, "2.185449"},
    {"type2", 2, "2[1,2,8]", 1393, 6561, "2.115907"},
    {"type2", 2, "2[1,3,4]", 1393, 6561, "2.011765"},
    {"type2", 2, "2[1,3,5]", 1393, 6561, "2.138765"},
    {"type2", 2, "2[1,3,6]", 1393, 6561, "2.161765"},
    {"type2", 2, "2[1,3,7]", 1393, 6561, "2.176471"},
    {"type2", 2, "2[1,3,8]", 1393, 6561, "2.113422"},
    {"type2", 2, "2[1,4,5]", 1393, 6561, "2.085655"},
    {"type2", 2, "2[1,4,6]", 1393, 6561, "2.212074"},
    {"type2", 2, "2[1,4,7]", 1393, 6561, "2.219646"},
    {"type2", 2, "2[1,4,8]", 1393, 6561, "2.171541"},
    {"type2", 2, "2[1,5,6]", 1393, 6561, "2.101420"},
    {"type2", 2, "2[1,5,7]", 1393, 6561, "2.164148"},
    {"type2", 2, "2[1,5,8]", 1393, 6561, "2.171541"},
    {"type2", 2, "2[1,6,7]", 1393, 6561, "2.111765"},
    {"type2", 2, "2[1,6,8]", 1393, 6561, "2.113422"},
    {"type2", 2, "2[1,7,8]", 1393, 6561, "2.115907"},
    {"type2", 2, "2[2,3,4]", 1393, 6561, "1.911765"},
    {"type2", 2, "2[2,3,5]", 1393, 6561, "2.138220"},
    {"type2", 2, "2[2,3,6]", 1393, 6561, "2.150153"},
    {"type2", 2, "2[2,3,7]", 1393, 6561, "2.171258"},
    {"type2", 2, "2[2,4,5]", 1393, 6561, "2.085655"},
    {"type2", 2, "2[2,4,6]", 1393, 6561, "2.203284"},
    {"type2", 2, "2[2,4,7]", 1393, 6561, "2.213514"},
    {"type2", 2, "2[2,5,6]", 1393, 6561, "2.139037"},
    {"type2", 2, "2[2,5,7]", 1393, 6561, "2.213514"},
    {"type2", 2, "2[2,6,7]", 1393, 6561, "2.171258"},
    {"type2", 2, "2[3,4,5]", 1393, 6561, "1.917639"},
    {"type2", 2, "2[3,4,6]", 1393, 6561, "2.148560"},
    {"type2", 2, "2[3,5,6]", 1393, 6561, "2.148560"},
    {"type2", 3, "2[1]", 3194, 1048576, "1.190238"},
    {"type2", 3, "2[2]", 3194, 1048576, "1.704828"},
    {"type2", 3, "2[3]", 3194, 1048576, "1.814364"},
    {"type2", 3, "2[4]", 3194, 1048576, "1.826600"},
    {"type2", 3, "2[1,2]", 3194, 262144, "1.834042"},
    {"type2", 3, "2[1,3]", 3194, 262144, "2.169631"},
    {"type2", 3, "2[1,4]", 3194, 262144, "2.726797"},
    {"type2", 3, "2[1,5]", 3194, 262144, "2.971795"},
    {"type2", 3, "2[1,6]", 3194, 262144, "2.961434"},
    {"type2", 3, "2[1,7]", 3194, 262144, "2.881866"},
    {"type2", 3, "2[1,8]", 3194, 262144, "2.374306"},
    {"type2", 3, "2[2,3]", 3194, 262144, "2.417989"},
    {"type2", 3, "2[2,4]", 3194, 262144, "2.702039"},
    {"type2", 3, "2[2,5]", 3194, 262144, "3.341018"},
    {"type2", 3, "2[2,6]", 3194, 262144, "3.484726"},
    {"type2", 3, "2[2,7]", 3194, 262144, "3.368019"},
    {"type2", 3, "2[3,4]", 3194, 262144, "2.604027"},
    {"type2", 3, "2[3,5]", 3194, 262144, "2.822416"},
    {"type2", 3, "2[3,6]", 3194, 262144, "3.324534"},
    {"type2", 3, "2[4,5]", 3194, 262144, "2.596933"},
    {"type2", 3, "2[1,2,3]", 3194, 65536, "2.470549"},
    {"type2", 3, "2[1,2,4]", 3194, 65536, "2.825476"},
    {"type2", 3, "2[1,2,5]", 3194, 65536, "3.323843"},
    {"type2", 3, "2[1,2,6]", 3194, 65536, "3.603125"},
    {"type2", 3, "2[1,2,7]", 3194, 65536, "3.491267"},
    {"type2", 3, "2[1,2,8]", 3194, 65536, "3.008458"},
    {"type2", 3, "2[1,3,4]", 3194, 65536, "2.860181"},
    {"type2", 3, "2[1,3,5]", 3194, 65536, "3.149485"},
    {"type2", 3, "2[1,3,6]", 3194, 65536, "3.702780"},
    {"type2", 3, "2[1,3,7]", 3194, 65536, "3.832265"},
    {"type2", 3, "2[1,3,8]", 3194, 65536, "3.308712"},
    {"type2", 3, "2[1,4,5]", 3194, 65536, "3.422874"},
    {"type2", 3, "2[1,4,6]", 3194, 65536, "3.704301"},
    {"type2", 3, "2[1,4,7]", 3194, 65536, "4.225000"},
    {"type2", 3, "2[1,4,8]", 3194, 65536, "3.865275"},
    {"type2", 3, "2[1,5,6]", 3194, 65536, "3.721368"},
    {"type2", 3, "2[1,5,7]", 3194, 65536, "3.838751"},
    {"type2", 3, "2[1,5,8]", 3194, 65536, "3.865275"},
    {"type2", 3, "2[1,6,7]", 3194, 65536, "3.557971"},
    {"type2", 3, "2[1,6,8]", 3194, 65536, "3.308712"},
    {"type2", 3, "2[1,7,8]", 3194, 65536, "3.008458"},
    {"type2", 3, "2[2,3,4]", 3194, 65536, "3.040346"},
    {"type2", 3, "2[2,3,5]", 3194, 65536, "3.373874"},
    {"type2", 3, "2[2,3,6]", 3194, 65536, "3.853886"},
    {"type2", 3, "2[2,3,7]", 3194, 65536, "4.066123"},
    {"type2", 3, "2[2,4,5]", 3194, 65536, "3.396416"},
    {"type2", 3, "2[2,4,6]", 3194, 65536, "3.676782"},
    {"type2", 3, "2[2,4,7]", 3194, 65536, "4.215385"},
    {"type2", 3, "2[2,5,6]", 3194, 65536, "4.042553"},
    {"type2", 3, "2[2,5,7]", 3194, 65536, "4.215385"},
    {"type2", 3, "2[2,6,7]", 3194, 65536, "4.066123"},
    {"type2", 3, "2[3,4,5]", 3194, 65536, "3.164613"},
    {"type2", 3, "2[3,4,6]", 3194, 65536, "3.535367"},
    {"type2", 3, "2[3,5,6]", 3194, 65536, "3.535367"},};
// clang-format on

}  // namespace

std::string to_string(TableId id) {
  switch (id) {
    case TableId::rect: return "rect";
    case TableId::hex: return "hex";
    case TableId::type1: return "type1";
    case TableId::type2: return "type2";
  }
  return "?";
}

TableId parse_table_id(const std::string& text) {
  for (auto id : {TableId::rect, TableId::hex, TableId::type1, TableId::type2})
    if (to_string(id) == text) return id;
  throw InvalidInput("unknown table id: " + text);
}

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = [] {
    std::vector<GoldenRow> out;
    for (const auto& r : kRows) {
      GoldenRow g;
      g.table = parse_table_id(r.table);
      g.k = r.k;
      g.case_id = r.case_id;
      if (r.omega_B >= 0) g.omega_B = BigInt(r.omega_B);
      if (r.omega_boundary >= 0) g.omega_boundary = BigInt(r.omega_boundary);
      g.e_max = r.e_max;
      if (g.e_max.front() == '>') {
        g.lower_bound = true;
        g.e_max.erase(0, 1);
      }
      out.push_back(std::move(g));
    }
    return out;
  }();
  return rows;
}

std::vector<GoldenRow> golden_rows(TableId table, int k) {
  std::vector<GoldenRow> out;
  for (const auto& g : golden_rows())
    if (g.table == table && g.k == k) out.push_back(g);
  return out;
}

std::optional<GoldenRow> golden_row(TableId table, int k, const std::string& case_id) {
  for (const auto& g : golden_rows())
    if (g.table == table && g.k == k && g.case_id == case_id) return g;
  return std::nullopt;
}

std::vector<CaseTag> case_catalog(CaseType type) {
  std::vector<CaseTag> out;
  TableId id = type == CaseType::type1 ? TableId::type1 : TableId::type2;
  for (const auto& g : golden_rows(id, 2)) out.push_back(CaseTag::parse(g.case_id));
  return out;
}

bool matches_golden(const DivergenceReport& report, const GoldenRow& golden,
                    std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (golden.omega_B && *golden.omega_B != report.omega_B)
    return fail("omega_B " + to_string(report.omega_B) + " != " + to_string(*golden.omega_B));
  if (golden.omega_boundary && *golden.omega_boundary != report.omega_boundary)
    return fail("omega_boundary " + to_string(report.omega_boundary) +
                " != " + to_string(*golden.omega_boundary));
  Rational target = parse_rational(golden.e_max);
  if (golden.lower_bound) {
    if (report.e_max > target) return true;
    return fail("e_max " + to_fixed(report.e_max, 6) + " not above " + golden.e_max);
  }
  Rational diff = abs(round_decimals(report.e_max, 6) - target);
  if (diff > Rational(1, 1000000))
    return fail("e_max " + to_fixed(report.e_max, 6) + " != " + golden.e_max);
  return true;
}

std::vector<TableRow> reproduce_table(TableId table, int k, const TableOptions& options) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  std::vector<DivergenceReport> reports;
  DivergenceOptions dopt;
  dopt.threads = options.threads;
  switch (table) {
    case TableId::rect: {
      RectDivergenceOptions ro;
      ro.threads = options.threads;
      auto g = golden_row(TableId::rect, k, "rect");
      if (g && g->lower_bound && !options.full_rect) ro.stop_above = parse_rational(g->e_max);
      reports.push_back(rect_divergence(k, ro).best);
      break;
    }
    case TableId::hex:
      reports.push_back(hex_divergence(k, dopt));
      break;
    case TableId::type1:
    case TableId::type2: {
      CaseType type = table == TableId::type1 ? CaseType::type1 : CaseType::type2;
      std::vector<CaseTag> tags;
      if (options.cases.empty()) {
        tags = case_catalog(type);
      } else {
        for (const auto& c : options.cases) {
          auto tag = CaseTag::parse(c);
          if (tag.type != type)
            throw InvalidInput("case " + c + " does not belong to table " + to_string(table));
          tags.push_back(tag);
        }
      }
      for (const auto& tag : tags) reports.push_back(case_divergence(tag, k, dopt));
      break;
    }
  }
  std::vector<TableRow> rows;
  for (auto& r : reports) {
    TableRow row;
    row.golden = golden_row(table, k, r.case_id);
    if (row.golden) row.matches = matches_golden(r, *row.golden, &row.mismatch);
    row.report = std::move(r);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::two: return "two";
    case Connectivity::three: return "three";
    case Connectivity::dual4: return "dual4";
  }
  return "?";
}

Rational printed_upper_bound(const Rational& exact) {
  Rational r = round_decimals(exact, 6) + Rational(1, 1000000);
  r.canonicalize();
  return r;
}

bool admissible(const CaseTag& tag, Connectivity connectivity) {
  const auto& l = tag.labels;
  switch (connectivity) {
    case Connectivity::two: return true;
    case Connectivity::dual4: return l.size() == 1;
    case Connectivity::three: {
      if (l.size() == 1) return true;
      if (l.size() != 2) return false;
      int gap = l[1] - l[0];
      if (gap == 1) return true;
      return tag.type == CaseType::type1 && gap == tag.face_degree - 1;
    }
  }
  return false;
}

AggregateReport regular_aggregates(Connectivity connectivity, int k,
                                   const DivergenceOptions& options) {
  if (k != 2 && k != 3) throw InvalidInput("aggregates are defined for k in {2, 3}");
  AggregateReport rep;
  rep.connectivity = connectivity;
  rep.k = k;
  bool first = true;
  Rational h_exact;
  for (CaseType type : {CaseType::type1, CaseType::type2})
    for (const auto& tag : case_catalog(type)) {
      if (!admissible(tag, connectivity)) continue;
      Rational e = case_divergence(tag, k, options).e_max;
      if (tag.type == CaseType::type2 && tag.labels == std::vector<int>{1}) h_exact = e;
      Rational n(static_cast<long>(tag.labels.size()));
      Rational star = (e - 1) / n;
      Rational star_bound = ceil_decimals((printed_upper_bound(e) - 1) / n, 6);
      if (first || star > rep.e_star_exact) {
        rep.e_star_exact = star;
        rep.extremal_case = tag.name();
      }
      if (first || star_bound > rep.e_star) rep.e_star = star_bound;
      first = false;
    }
  if (connectivity == Connectivity::two) {
    // at most 10 blocks per neighbour w_i contain w_i but not v
    rep.sum_exact = 30 * rep.e_star_exact;
    rep.sum = 30 * rep.e_star;
  } else {
    // six type-2 blocks from the faces at v, 24 face blocks through the neighbours
    rep.h_exact = h_exact;
    rep.h_bound = printed_upper_bound(h_exact);
    rep.sum_exact = 6 * (rep.h_exact - 1) + 24 * rep.e_star_exact;
    rep.sum = 6 * (rep.h_bound - 1) + 24 * rep.e_star;
  }
  rep.margin_exact = 24 - rep.sum_exact;
  rep.margin = 24 - rep.sum;
  return rep;
}

}  // namespace kheight

#include "treeshift/published_polynomials.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace treeshift {

namespace {

// Published coefficient listings for k = 2..8, one "degree:coefficient"
// token per nonzero term. For k = 3 the listings of A, b and d carry the
// factors 2, 2 and 4 noted in PublishedPolynomials.
struct Listing {
  int k;
  std::string_view A, b, d, q;
};

constexpr std::array<Listing, 7> kListings{{
    {2,
     "0:-1/1 1:1/1 2:-1/2 3:-1/1",
     "1:1/1 2:-1/2",
     "0:1/1 1:-2/1 2:1/1 3:-2/1 4:2/1 6:1/1",
     "0:1/1"},
    {3,
     "0:-2/1 2:3/1 3:-6/1 4:9/1 5:-6/1 6:-1/1 8:-3/1",
     "2:3/1 3:-2/1 4:3/1 5:-2/1 6:-1/1 8:-1/1",
     "0:4/1 2:-12/1 3:24/1 4:-36/1 6:36/1 7:-72/1 8:60/1 9:8/1 10:-36/1 11:72/1 12:-16/1 "
     "14:24/1 15:-16/1 18:-4/1",
     "0:1/1 1:2/1 3:4/1 4:1/1 6:4/1 7:-2/1 10:-1/1"},
    {4,
     "0:-1/1 3:2/1 4:-9/2 6:9/1 7:-6/1 8:-9/2 9:8/1 10:-3/1 11:-6/1 12:-1/2 14:-3/1 15:-2/1 "
     "18:-1/1",
     "3:2/1 4:-3/2 6:5/1 7:-3/1 8:-3/2 9:2/1 11:-3/1 12:-1/2 15:-1/1",
     "0:1/1 3:-4/1 4:9/1 6:-18/1 8:27/1 9:-16/1 10:-48/1 11:36/1 12:37/1 13:-48/1 14:-30/1 "
     "15:68/1 16:27/1 17:-48/1 18:18/1 19:48/1 20:18/1 21:-16/1 22:24/1 23:12/1 24:20/1 "
     "26:6/1 28:15/1 32:6/1 36:1/1",
     "0:1/1 1:2/1 2:3/1 4:6/1 5:14/1 6:6/1 8:15/1 9:26/1 10:4/1 12:18/1 13:18/1 14:4/1 16:9/1 "
     "17:6/1 18:6/1 21:2/1 22:4/1 26:1/1"},
    {5,
     "0:-1/1 4:5/2 5:-6/1 8:15/1 9:-10/1 10:-9/1 12:25/1 13:-10/1 14:-15/1 15:-6/1 16:25/2 "
     "18:-15/1 19:-10/1 20:-1/2 23:-10/1 24:-5/2 28:-5/2",
     "4:5/2 5:-2/1 8:10/1 9:-6/1 10:-3/1 12:10/1 13:-2/1 14:-9/1 15:-2/1 16:5/2 18:-3/1 "
     "19:-6/1 20:-1/2 23:-2/1 24:-3/2 28:-1/2",
     "0:1/1 4:-5/1 5:12/1 8:-30/1 10:50/1 12:-50/1 13:-100/1 14:80/1 15:108/1 16:-25/1 "
     "17:-200/1 18:-70/1 19:240/1 20:137/1 21:-100/1 22:-300/1 23:140/1 24:345/1 25:100/1 "
     "26:-150/1 27:-200/1 28:320/1 29:300/1 30:22/1 31:-100/1 32:-50/1 33:300/1 34:170/1 "
     "35:-44/1 36:-25/1 38:170/1 39:60/1 40:-68/1 43:60/1 44:10/1 45:-56/1 48:10/1 50:-28/1 "
     "55:-8/1 60:-1/1",
     "0:1/1 1:2/1 2:3/1 3:4/1 5:8/1 6:18/1 7:30/1 8:14/1 10:28/1 11:72/1 12:85/1 13:20/1 "
     "15:56/1 16:143/1 17:110/1 18:15/1 20:68/1 21:148/1 22:74/1 23:2/1 25:48/1 26:82/1 "
     "27:20/1 28:-13/1 30:16/1 31:28/1 32:-10/1 33:-20/1 36:7/1 37:-10/1 38:-15/1 42:-2/1 "
     "43:-6/1 48:-1/1"},
    {6,
     "0:-1/1 5:3/1 6:-15/2 10:45/2 11:-15/1 12:-15/1 15:55/1 16:-45/2 17:-30/1 18:-15/1 "
     "20:105/2 21:-5/1 22:-45/1 23:-30/1 24:-15/2 25:18/1 27:-10/1 28:-45/1 29:-15/1 30:-1/2 "
     "33:-10/1 34:-45/2 35:-3/1 39:-5/1 40:-9/2 45:-1/1",
     "5:3/1 6:-5/2 10:33/2 11:-10/1 12:-5/1 15:28/1 16:-15/2 17:-20/1 18:-5/1 20:35/2 "
     "22:-15/1 23:-20/1 24:-5/2 25:3/1 28:-15/1 29:-10/1 30:-1/2 34:-15/2 35:-2/1 40:-3/2",
     "0:1/1 5:-6/1 6:15/1 10:-45/1 12:80/1 15:-110/1 16:-180/1 17:150/1 18:230/1 20:-105/1 "
     "21:-540/1 22:-135/1 23:600/1 24:415/1 25:-36/1 26:-525/1 27:-1030/1 28:540/1 29:1200/1 "
     "30:501/1 31:-180/1 32:-1050/1 33:-880/1 34:1620/1 35:1494/1 36:415/1 37:-360/1 "
     "38:-1050/1 39:-140/1 40:2205/1 41:1230/1 42:255/1 43:-360/1 44:-525/1 45:390/1 "
     "46:1845/1 47:660/1 48:180/1 49:-180/1 50:-105/1 51:410/1 52:990/1 53:210/1 54:215/1 "
     "55:-36/1 57:220/1 58:315/1 59:30/1 60:252/1 63:70/1 64:45/1 66:210/1 69:10/1 72:120/1 "
     "78:45/1 84:10/1 90:1/1",
     "0:1/1 1:2/1 2:3/1 3:4/1 4:5/1 6:10/1 7:22/1 8:36/1 9:52/1 10:25/1 12:45/1 13:110/1 "
     "14:198/1 15:202/1 16:55/1 18:120/1 19:330/1 20:555/1 21:394/1 22:70/1 24:210/1 25:624/1 "
     "26:888/1 27:462/1 28:56/1 30:250/1 31:740/1 32:888/1 33:354/1 34:33/1 36:200/1 37:540/1 "
     "38:600/1 39:192/1 40:33/1 42:100/1 43:240/1 44:285/1 45:100/1 46:56/1 48:25/1 49:70/1 "
     "50:90/1 51:70/1 52:70/1 55:14/1 56:18/1 57:42/1 58:56/1 62:3/1 63:14/1 64:28/1 69:2/1 "
     "70:8/1 76:1/1"},
    {7,
     "0:-1/1 6:7/2 7:-9/1 12:63/2 13:-21/1 14:-45/2 18:203/2 19:-42/1 20:-105/2 21:-30/1 "
     "24:147/1 25:-21/1 26:-105/1 27:-70/1 28:-45/2 30:98/1 32:-105/2 33:-140/1 34:-105/2 "
     "35:-9/1 36:49/2 39:-70/1 40:-105/1 41:-21/1 42:-1/2 46:-105/2 47:-42/1 48:-7/2 53:-21/1 "
     "54:-7/1 60:-7/2",
     "6:7/2 7:-3/1 12:49/2 13:-15/1 14:-15/2 18:119/2 19:-18/1 20:-75/2 21:-10/1 24:63/1 "
     "25:-3/1 26:-45/1 27:-50/1 28:-15/2 30:28/1 32:-15/2 33:-60/1 34:-75/2 35:-3/1 36:7/2 "
     "39:-10/1 40:-45/1 41:-15/1 42:-1/2 46:-15/2 47:-18/1 48:-5/2 53:-3/1 54:-3/1 60:-1/2",
     "0:1/1 6:-7/1 7:18/1 12:-63/1 14:117/1 18:-203/1 19:-294/1 20:252/1 21:420/1 24:-294/1 "
     "25:-1176/1 26:-231/1 27:1260/1 28:975/1 30:-196/1 31:-1764/1 32:-2688/1 33:1540/1 "
     "34:3255/1 35:1578/1 36:-49/1 37:-1176/1 38:-4410/1 39:-2660/1 40:5775/1 41:5460/1 "
     "42:1845/1 43:-294/1 44:-2940/1 45:-5880/1 46:315/1 47:10626/1 48:6461/1 49:1566/1 "
     "50:-735/1 51:-3920/1 52:-4410/1 53:4284/1 54:12873/1 55:5586/1 56:909/1 57:-980/1 "
     "58:-2940/1 59:-1764/1 60:6265/1 61:11172/1 62:3570/1 63:200/1 64:-735/1 65:-1176/1 "
     "66:-294/1 67:5586/1 68:7140/1 69:1680/1 70:-378/1 71:-294/1 72:-196/1 74:3570/1 "
     "75:3360/1 76:567/1 77:-774/1 78:-49/1 81:1680/1 82:1134/1 83:126/1 84:-922/1 88:567/1 "
     "89:252/1 90:14/1 91:-792/1 95:126/1 96:28/1 98:-495/1 102:14/1 105:-220/1 112:-66/1 "
     "119:-12/1 126:-1/1",
     "0:1/1 1:2/1 2:3/1 3:4/1 4:5/1 5:6/1 7:12/1 8:26/1 9:42/1 10:60/1 11:80/1 12:39/1 "
     "14:66/1 15:156/1 16:273/1 17:420/1 18:397/1 19:116/1 21:220/1 22:572/1 23:1092/1 "
     "24:1526/1 25:1036/1 26:209/1 28:495/1 29:1430/1 30:2807/1 31:3304/1 32:1708/1 33:252/1 "
     "35:792/1 36:2525/1 37:4732/1 38:4711/1 39:1932/1 40:210/1 42:922/1 43:3134/1 44:5377/1 "
     "45:4724/1 46:1537/1 47:114/1 49:780/1 50:2669/1 51:4270/1 52:3422/1 53:820/1 54:6/1 "
     "56:465/1 57:1510/1 58:2471/1 59:1736/1 60:193/1 61:-106/1 63:180/1 64:555/1 65:1064/1 "
     "66:532/1 67:-154/1 68:-208/1 70:36/1 71:138/1 72:329/1 73:28/1 74:-238/1 75:-252/1 "
     "78:23/1 79:70/1 80:-56/1 81:-168/1 82:-210/1 86:10/1 87:-24/1 88:-72/1 89:-120/1 "
     "94:-3/1 95:-18/1 96:-45/1 102:-2/1 103:-10/1 110:-1/1"},
    {8,
     "0:-1/1 7:4/1 8:-21/2 14:42/1 15:-28/1 16:-63/2 21:168/1 22:-70/1 23:-84/1 24:-105/2 "
     "28:329/1 29:-56/1 30:-210/1 31:-140/1 32:-105/2 35:336/1 36:-7/1 37:-168/1 38:-350/1 "
     "39:-140/1 40:-63/2 42:168/1 44:-21/1 45:-280/1 46:-350/1 47:-84/1 48:-21/2 49:32/1 "
     "52:-35/1 53:-280/1 54:-210/1 55:-28/1 56:-1/2 60:-35/1 61:-168/1 62:-70/1 63:-4/1 "
     "68:-21/1 69:-56/1 70:-10/1 76:-7/1 77:-8/1 84:-1/1",
     "7:4/1 8:-7/2 14:34/1 15:-21/1 16:-21/2 21:108/1 22:-35/1 23:-63/1 24:-35/2 28:165/1 "
     "29:-14/1 30:-105/1 31:-105/1 32:-35/2 35:126/1 37:-42/1 38:-175/1 39:-105/1 40:-21/2 "
     "42:42/1 45:-70/1 46:-175/1 47:-63/1 48:-7/2 49:4/1 53:-70/1 54:-105/1 55:-21/1 56:-1/2 "
     "61:-42/1 62:-35/1 63:-3/1 69:-14/1 70:-5/1 77:-2/1",
     "0:1/1 7:-8/1 8:21/1 14:-84/1 16:161/1 21:-336/1 22:-448/1 23:392/1 24:693/1 28:-658/1 "
     "29:-2240/1 30:-364/1 31:2352/1 32:1967/1 35:-672/1 36:-4592/1 37:-5936/1 38:3640/1 "
     "39:7448/1 40:3983/1 42:-336/1 43:-4704/1 44:-13678/1 45:-6496/1 46:16380/1 47:15680/1 "
     "48:5999/1 49:-64/1 50:-2352/1 51:-14112/1 52:-22372/1 53:3696/1 54:37856/1 55:23912/1 "
     "56:6861/1 57:-448/1 58:-7056/1 59:-23520/1 60:-21098/1 61:24640/1 62:59332/1 63:27432/1 "
     "64:5999/1 65:-1344/1 66:-11760/1 67:-23520/1 68:-9856/1 69:45584/1 70:68516/1 "
     "71:23968/1 72:4032/1 73:-2240/1 74:-11760/1 75:-14112/1 76:1386/1 77:54544/1 78:59920/1 "
     "79:15848/1 80:2261/1 81:-2240/1 82:-7056/1 83:-4704/1 84:6202/1 85:47936/1 86:39620/1 "
     "87:7728/1 88:1624/1 89:-1344/1 90:-2352/1 91:-672/1 92:5992/1 93:31696/1 94:19320/1 "
     "95:2632/1 96:2121/1 97:-448/1 98:-336/1 100:3962/1 101:15456/1 102:6580/1 103:560/1 "
     "104:3010/1 105:-64/1 108:1932/1 109:5264/1 110:1400/1 111:56/1 112:3432/1 116:658/1 "
     "117:1120/1 118:140/1 120:3003/1 124:140/1 125:112/1 128:2002/1 132:14/1 136:1001/1 "
     "144:364/1 152:91/1 160:14/1 168:1/1",
     "0:1/1 1:2/1 2:3/1 3:4/1 4:5/1 5:6/1 6:7/1 8:14/1 9:30/1 10:48/1 11:68/1 12:90/1 "
     "13:114/1 14:56/1 16:91/1 17:210/1 18:360/1 19:544/1 20:765/1 21:690/1 22:210/1 24:364/1 "
     "25:910/1 26:1680/1 27:2720/1 28:3422/1 29:2258/1 30:490/1 32:1001/1 33:2730/1 34:5460/1 "
     "35:8848/1 36:9364/1 37:4804/1 38:791/1 40:2002/1 41:6006/1 42:12768/1 43:19376/1 "
     "44:17402/1 45:7244/1 46:924/1 48:3003/1 49:9946/1 50:21544/1 51:29824/1 52:23488/1 "
     "53:8052/1 54:792/1 56:3430/1 57:12418/1 58:26234/1 59:33720/1 60:23900/1 61:6672/1 "
     "62:502/1 64:2989/1 65:11494/1 66:23212/1 67:29096/1 68:18552/1 69:4128/1 70:276/1 "
     "72:1960/1 73:7658/1 74:15176/1 75:19600/1 76:10944/1 77:2024/1 78:276/1 80:931/1 "
     "81:3542/1 82:7504/1 83:10304/1 84:4942/1 85:1108/1 86:502/1 88:294/1 89:1106/1 "
     "90:2828/1 91:4144/1 92:1876/1 93:980/1 94:792/1 96:49/1 97:238/1 98:784/1 99:1232/1 "
     "100:770/1 101:924/1 102:924/1 105:34/1 106:152/1 107:256/1 108:360/1 109:660/1 "
     "110:792/1 114:19/1 115:36/1 116:135/1 117:330/1 118:495/1 123:4/1 124:30/1 125:110/1 "
     "126:220/1 132:3/1 133:22/1 134:66/1 141:2/1 142:12/1 150:1/1"},
}};

Polynomial parse_listing(std::string_view text) {
  std::vector<std::pair<std::size_t, Rational>> terms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    std::size_t colon = tok.find(':');
    std::size_t deg = std::stoul(std::string(tok.substr(0, colon)));
    terms.emplace_back(deg, Rational::parse(tok.substr(colon + 1)));
    pos = end;
  }
  return Polynomial::from_terms(terms);
}

}  // namespace

std::optional<PublishedPolynomials> published_polynomials(int k) {
  for (const auto& l : kListings) {
    if (l.k != k) continue;
    PublishedPolynomials p;
    p.k = k;
    p.A = parse_listing(l.A);
    p.rad_coeff = parse_listing(l.b);
    p.d = parse_listing(l.d);
    p.q = parse_listing(l.q);
    if (k == 3) {
      p.rad_scale = Rational(2);
      p.d_scale = Rational(4);
    }
    return p;
  }
  return std::nullopt;
}

}  // namespace treeshift

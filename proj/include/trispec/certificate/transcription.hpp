#pragma once

// The printed proof polynomials, transcribed once with exact rational
// coefficients. Every entry keeps a short formula fragment that locates it in
// the source text, so a transcription error can be found by diffing.
//
// Variables: p, q, alpha (the Rayleigh mixing parameter), x (cube-root
// substitution). Constants: pi, sqrt1729, cbrt2, cbrt4. Radicals of
// polynomials are written with sqrt(...) and cbrt(...).

#include <string>
#include <string_view>
#include <vector>

#include "trispec/error.hpp"
#include "trispec/rigor/expr.hpp"

namespace trispec::certificate {

inline constexpr int kTranscriptionVersion = 1;

enum class Provenance {
  PRINTED,        // as printed
  RECONSTRUCTED,  // printed form is garbled; rebuilt from its neighbours
  DEFINITION,     // a named combination of printed entries
};

struct Formula {
  std::string id;
  std::string text;
  std::string locator;
  Provenance provenance = Provenance::PRINTED;
};

inline const std::vector<Formula>& transcription() {
  static const std::vector<Formula> table = {
      // Rayleigh coefficients of the two transplant families.
      {"coeff.A45",
       "(p*(256 - 90*pi^2) + p^2*(-256 + 90*pi^2) - 256*q^2 + 45*pi^2*(1 + 2*q^2))/(72*q)",
       "p (256 - 90 pi^2)"},
      {"coeff.B45", "512*(1 - 2*p)/(175*q)", "512(1 - 2p)"},
      {"coeff.C45", "5*pi^2*(1 - 2*p + 2*p^2 + 2*q^2)/(4*q)", "5 pi^2 (1 - 2p + 2p^2 + 2q^2)"},
      {"coeff.D45", "q/4", "D45 = q/4"},
      {"coeff.E45", "0", "E45 = 0"},
      {"coeff.F45", "q/4", "F45 = q/4"},
      {"coeff.A30",
       "(-1594323 + 604800*pi^2 + 4*p*(1245184 - 713743*p + 100800*(-3 + 2*p)*pi^2) - 2854972*q^2 + "
       "806400*pi^2*q^2)/(345600*q)",
       "-1594323 + 604800 pi^2"},
      {"coeff.B30", "-(2657205 + 4*p*(-1507328 + 621593*p) + 2486372*q^2)/(354816*q)", "2657205 + 4p(-1507328"},
      {"coeff.C30",
       "(-1594323 + p*(6209536 - 6879600*pi^2) + 28*p^2*(-145849 + 163800*pi^2) - 4083772*q^2 + "
       "1146600*pi^2*(3 + 4*q^2))/(1058400*q)",
       "p (6209536 - 6879600 pi^2)"},
      {"coeff.D30", "3*q/8", "D30 = 3q/8"},
      {"coeff.E30", "0", "E30 = 0"},
      {"coeff.F30", "3*q/8", "F30 = 3q/8"},

      // Area I: 45-45-90 transplant against the diameter/height bound.
      {"area1.objective",
       "256*alpha*(288 - 576*p - 175*((-1 + p)*p + q^2)*alpha) - 7350*pi^2*(1 + q)^2*(1 + alpha^2) + "
       "7875*pi^2*(1 + 2*(-1 + p)*p + 2*q^2)*(2 + alpha^2)",
       "256 alpha (288 - 576 p"},
      {"area1.lead_p", "31500*pi^2 - 44800*alpha^2 + 15750*pi^2*alpha^2", "31500 pi^2 - 44800 alpha^2"},
      {"area1.lead_q", "350*(69*pi^2 - 128*alpha^2 + 24*pi^2*alpha^2)", "350 (69 pi^2 - 128 alpha^2"},
      {"area1.corner_left", "7*(1805312*alpha^2 - 3*pi^2*(70267 + 327457*alpha^2))/1250", "1805312 alpha^2"},
      {"area1.corner_right", "(128*alpha*(-864000 + 355537*alpha) - 21*pi^2*(112318 + 1225453*alpha^2))/5000",
       "128 alpha (-864000 + 355537 alpha)"},
      {"area1.arc",
       "-73728*sqrt(1 - 4*q^2)*alpha - 525*pi^2*(-16 - alpha^2 + 14*q*(2 + q)*(1 + alpha^2))",
       "-73728 sqrt(1 - 4q^2) alpha"},
      {"area1.arc_lead", "-525*pi^2*(-1 + 28*q + 14*q^2)", "-525 pi^2 (-1 + 28q + 14q^2)"},
      {"area1.arc_disc", "72*(-75497472*(-1 + 4*q^2) - 30625*pi^4*(-8 + 7*q*(2 + q))*(-1 + 14*q*(2 + q)))",
       "30625 pi^4 (-8 + 7q(2+q))"},
      {"area1.arc_disc_derivative",
       "-864360000*pi^4*q^3 - 2593080000*pi^4*q^2 - 72*(603979776 + 16721250*pi^4)*q + 524790000*pi^4",
       "-864360000 pi^4 q^3"},

      // Area II: 30-60-90 transplant against the diameter/height bound.
      {"area2.objective",
       "3*((-256*p*(-10486784 + 2546775*pi^2) + 28*p^2*(-54958211 + 15523200*pi^2) - "
       "539*(1594323 + 2854972*q^2) + 54331200*pi^2*(3 + q*(-6 + 5*q)))*alpha^2 + "
       "(-2790065250 + 6330777600*p - 2610690600*p^2 - 2610690600*q^2)*alpha - 280600848 - "
       "256*p*(-4269056 + 4729725*pi^2) + 28*p^2*(-25669424 + 28828800*pi^2) - 718743872*q^2 + "
       "7761600*pi^2*(57 - 42*q + 83*q^2))",
       "-256 p (-10486784 + 2546775 pi^2)"},
      {"area2.lead_p", "84*(-25669424 - 7*alpha*(13319850 + 7851173*alpha) + 2217600*pi^2*(13 + 7*alpha^2))",
       "2217600 pi^2 (13 + 7 alpha^2)"},
      {"area2.lead_q", "3*(-718743872 - 2610690600*alpha - 1538829908*alpha^2 + 7761600*pi^2*(83 + 35*alpha^2))",
       "7761600 pi^2 (83 + 35 alpha^2)"},
      {"area2.lead_p_chain", "84*(-7*7851173 + 7*2217600*pi^2)", "84(-7 * 7851173 + 7 * 2217600 pi^2)"},
      {"area2.lead_p_chain_bound", "84*(-10^7 + 10^8)", "84(-10^7 + 10^8)"},
      {"area2.lead_q_chain", "3*(-1538829908 + 35*7761600*pi^2)", "3(-1538829908 + 35 * 7761600 pi^2)"},
      {"area2.lead_q_chain_bound", "3*(-10^9 + 2*10^9)", "3(-10^9 + 2 * 10^9)"},
      {"area2.lead_p_disc",
       "(-7*84*13319850)^2 - 4*84^2*(-7*7851173 + 7*2217600*pi^2)*(-25669424 + 13*2217600*pi^2)",
       "(-7 * 84 * 13319850)^2"},
      {"area2.lead_q_disc",
       "(3*(-2610690600))^2 - 4*3^2*(-718743872 + 7761600*83*pi^2)*(-1538829908 + 7761600*35*pi^2)",
       "(3 * -2610690600)^2"},
      {"area2.corner",
       "(3*(6788089600688 + 7*alpha*(1414193259450 + 1768358569901*alpha)) + "
       "3*(-7761600*pi^2*(312007 + 977515*alpha^2)))/62500",
       "6788089600688"},
      {"area2.p2", "(1423 + 10*sqrt1729)/1945", "(1423 + 10 sqrt1729)/1945"},
      {"area2.line",
       "(528*(-5857161498 + 15856621390*p - 9928670675*p^2 + 11025*(682563 + 5*p*(-308418 + 171935*p))*pi^2) - "
       "3150*(4620157398 + 5*p*(-2211921178 + 1208998385*p))*alpha + "
       "1617*(-4394582298 + 11485165390*p - 6941150675*p^2 + 126000*(10401 + 5*p*(-4566 + 2245*p))*pi^2)*"
       "alpha^2)/625",
       "528 (-5857161498 + 15856621390 p", Provenance::RECONSTRUCTED},
      {"area2.line_lead",
       "1617*(-4394582298 + 11485165390*p - 6941150675*p^2 + 126000*(10401 + 5*p*(-4566 + 2245*p))*pi^2)/625",
       "1617/625 (-4394582298"},
      {"area2.line_disc",
       "1764*(5625*(4620157398 + 5*p*(-2211921178 + 1208998385*p))^2 - "
       "1936*(-4394582298 + 11485165390*p - 6941150675*p^2 + 126000*(10401 + 5*p*(-4566 + 2245*p))*pi^2)*"
       "(-5857161498 + 15856621390*p - 9928670675*p^2 + 11025*(682563 + 5*p*(-308418 + 171935*p))*pi^2))/390625",
       "1936 (-4394582298 + 11485165390 p"},
      {"area2.line_disc_at_start",
       "-(63504*(-1238597349932730480637535561 + 1524600*pi^2*(-147282555087281544521 + "
       "24336702382640067000*pi^2)))/20390869140625",
       "-1238597349932730480637535561"},
      {"area2.line_disc_at_end",
       "-142884*(-93894331197981557997*(-214373 + 880*sqrt1729) + 1355200*pi^2*(-114850305*(-57253311661 + "
       "1065417440*sqrt1729) + 21952*(-155377895789549 + 3421629255040*sqrt1729)*pi^2))/572451126025",
       "-93894331197981557997"},
      {"area2.arc",
       "27*(-177147*(22 + 7*alpha)*(8 + 77*alpha) + 236196*p*(22 + 7*alpha)*(8 + 77*alpha) + "
       "18110400*p^2*pi^2*(1 + alpha^2) - 862400*p*pi^2*(73 + 49*alpha^2) - "
       "2587200*pi^2*(-19 + 14*sqrt(p*(1 - p)) + 7*(-1 + 2*sqrt(p*(1 - p)))*alpha^2))",
       "18110400 p^2 pi^2 (1 + alpha^2)"},
      {"area2.f",
       "-95482233 + 127309644*p - 42257600*p*pi^2 + 18110400*p^2*pi^2 - 18110400*(-1 + 2*sqrt((1 - p)*p))*pi^2",
       "-95482233 + 127309644 p"},
      {"area2.g",
       "-31177872 + 41570496*p - 62955200*p*pi^2 + 18110400*p^2*pi^2 - 2587200*(-19 + 14*sqrt(-(-1 + p)*p))*pi^2",
       "-31177872 + 41570496 p"},
      {"area2.f_derivative",
       "(127309644 - 42257600*pi^2) + 2*18110400*pi^2*p + 18110400*pi^2*(2*p - 1)/sqrt((1 - p)*p)",
       "(127309644 - 42257600 pi^2)"},
      {"area2.arc_linear", "27*(-310007250 + 413343000*p)", "729 (-310007250 + 413343000 p)^2"},
      {"area2.radical_bound_1", "-2*(p - 1/2)^2 + 1/2", "-2(p - 1/2)^2 + 1/2"},
      {"area2.radical_bound_2", "1/2 - (p - 1/2)^2 - 0.02", "1/2 - (p - 1/2)^2 - 0.02"},
      {"area2.f0",
       "-95482233 + 127309644*p - 42257600*p*pi^2 + 18110400*p^2*pi^2 - "
       "18110400*(-1 + 2*(1/2 - (p - 1/2)^2 - 0.02))*pi^2",
       "f0(p)"},
      {"area2.g0",
       "-31177872 + 41570496*p - 62955200*p*pi^2 + 18110400*p^2*pi^2 - 2587200*(-19 + 14*(-2*(p - 1/2)^2 + 1/2))*pi^2",
       "g0(p)"},
      {"area2.r", "729*(-310007250 + 413343000*p)^2 - 2916*f0*g0", "=: r(p)", Provenance::DEFINITION},
      {"area2.r_third_derivative",
       "-344307200786841600000*pi^4*p - 241212414904592947200*pi^2 + 253038466610012160000*pi^4",
       "-344307200786841600000 pi^4 p"},
      {"area2.r_third_root", "(-17301357 + 18149600*pi^2)/(24696000*pi^2)", "(-17301357 + 18149600 pi^2)"},
      {"area2.r_second_lead", "-172153600393420800000*pi^4", "-172153600393420800000 pi^4"},

      // Area III: rectangle bound against the angle/Bessel bound.
      {"area3.f_core", "(1 + cbrt(4*q^2))^3/q", "(1 + cbrt(4q^2))^3 / q"},
      {"area3.f_core_derivative", "(1 + cbrt(4*q^2))^2/q^2*(cbrt(4*q^2) - 1)", "(cbrt(4q^2) - 1) <= 0"},
      {"area3.f", "3*pi^2*(1 + cbrt(4*q^2))^3/q", "3 pi^2 (1 + cbrt(4q^2))^3 / q"},

      // Area IV: rectangle bound against the diameter/height bound.
      {"area4.f", "3*(1 + cbrt(4*q^2))^3 - 7*(q + 1)^2", "3(1 + cbrt(4q^2))^3 - 7(q+1)^2"},
      {"area4.f_of_x", "3*(1 + cbrt4*x^2)^3 - 7*(x^3 + 1)^2", "x = cbrt(q)", Provenance::DEFINITION},
      {"area4.derivative", "6*x*(3*cbrt4 - 7*x + 12*cbrt2*x^2 + 5*x^4)", "6x(3 * 2^(2/3) - 7x"},
      {"area4.bracket", "3*cbrt4 - 7*x + 12*cbrt2*x^2 + 5*x^4", "3 * 2^(2/3) - 7x + 12 * 2^(1/3) x^2 + 5x^4"},
      {"area4.root_bound", "3*cbrt4/7", "3 * 2^(2/3) / 7"},
  };
  return table;
}

inline const Formula& formula(std::string_view id) {
  for (const auto& f : transcription()) {
    if (f.id == id) return f;
  }
  throw Error("no transcribed formula '" + std::string(id) + "'");
}

inline rigor::Expr expr(std::string_view id) { return rigor::parse(formula(id).text); }

}  // namespace trispec::certificate

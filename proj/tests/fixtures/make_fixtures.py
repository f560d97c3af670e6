#!/usr/bin/env python3
"""Regenerates the JSON/CSV test fixtures and prints the frozen oracle values.

Engineered stocks use a collinear EPS history (2015..2019) plus fy0/fy1 on the
same line, so the least-squares trend is exact and the 2025 horizon EPS is
a + 10 b. Prices are solved so the implied 5-year annualized return hits a
chosen target, then rounded to cents.
"""
import json
import os
from decimal import Decimal, ROUND_HALF_UP

HERE = os.path.dirname(os.path.abspath(__file__))
AS_OF = "2020-03-15"
BASE_YEAR = 2015
HIST_YEARS = 5
HORIZON = 5


def d4(x):
    return Decimal(x).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)


def d2(x):
    return Decimal(x).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def engineer(ticker, name, sector, industry, price0, eps0, growth, target_ret, cap,
             past, analysts, cr, slope=None):
    mult = Decimal("8.5") + 2 * Decimal(growth)
    factor = (1 + Decimal(target_ret) / 100) ** HORIZON
    idx5 = HIST_YEARS + HORIZON  # fy0 is index 5, horizon index 10
    a = d4(eps0)
    if slope is None:
        eps5_target = Decimal(price0) * factor / mult
        b = d4((eps5_target - a) / idx5)
    else:
        b = d4(slope)
    eps = [a + b * i for i in range(HIST_YEARS + 2)]
    eps5 = a + b * idx5
    price = d2(mult * eps5 / factor)
    stock = {
        "ticker": ticker,
        "name": name,
        "sector": sector,
        "industry": industry,
        "currency": "USD",
        "price": float(price),
        "market_cap_usd": float(cap),
        "analyst_count": analysts,
        "growth_5y_est_pct": float(growth),
        "past_growth_5y_pct": float(past),
        "current_ratio": float(cr),
        "eps_history": [{"year": BASE_YEAR + i, "eps": float(eps[i])} for i in range(HIST_YEARS)],
        "eps_fy0_est": float(eps[HIST_YEARS]),
        "eps_fy1_est": float(eps[HIST_YEARS + 1]),
    }
    ret = (float(mult * eps5) / float(price)) ** (1 / HORIZON) * 100 - 100
    return stock, ret


def write_json(name, stocks):
    with open(os.path.join(HERE, name), "w") as f:
        json.dump({"as_of": AS_OF, "stocks": stocks}, f, indent=2)
        f.write("\n")


def mega_screen():
    # ticker, name, price0, eps0, growth, 5Y% target, cap, P5%, AN#, CR
    rows = [
        ("BABA", "Alibaba Group", 185, 4.0, 30, 121, 480e9, 30, 37, 1.8),
        ("FB", "Facebook", 170, 6.0, 25, 35, 480e9, 42, 51, 4.4),
        ("JPM", "JPMorgan Chase", 100, 6.0, 8, 27, 305e9, 15, 26, 0.0),
        ("AMZN", "Amazon.com", 1900, 1.25, 30, 23, 950e9, 101, 49, 1.1),
        ("AAPL", "Apple", 250, 9.2, 12, 22, 1100e9, 8, 40, 1.6),
        ("MSFT", "Microsoft", 150, 2.5, 12, 21, 1150e9, 18, 32, 2.8),
        ("GOOGL", "Alphabet", 1200, 30.0, 15, 8, 800e9, 15, 46, 3.4),
        ("WMT", "Walmart", 115, 4.5, 5, 5, 325e9, 1, 28, 0.8),
    ]
    stocks, rets = [], {}
    for t, n, p0, e0, g, r, cap, past, an, cr in rows:
        s, ret = engineer(t, n, "", "", p0, e0, g, r, cap, past, an, cr)
        stocks.append(s)
        rets[t] = ret
    # V shares MSFT's valuation inputs so both land on exactly the same 5Y%.
    v = json.loads(json.dumps(stocks[5]))
    v.update(ticker="V", name="Visa", market_cap_usd=320e9, past_growth_5y_pct=22.0,
             analyst_count=37, current_ratio=1.3)
    stocks.insert(6, v)
    rets["V"] = rets["MSFT"]
    for s in stocks:
        s["sector"], s["industry"] = "Mega Fixture", "Mega Fixture"
    write_json("mega_screen.json", stocks)
    print("mega_screen 5Y%:", {k: round(x, 6) for k, x in rets.items()})


def amzn():
    flat = 27.12
    s = {
        "ticker": "AMZN", "name": "Amazon.com", "sector": "Consumer Cyclical",
        "industry": "Internet Retail", "currency": "USD", "price": 292.24,
        "market_cap_usd": 140e9, "analyst_count": 49, "growth_5y_est_pct": 101.0,
        "past_growth_5y_pct": 101.0, "current_ratio": 1.1,
        "eps_history": [{"year": y, "eps": flat} for y in range(2014, 2019)],
        "eps_fy0_est": flat, "eps_fy1_est": flat,
    }
    neg = {
        "ticker": "LOSS", "name": "Always Negative", "sector": "Technology",
        "industry": "Software", "currency": "USD", "price": 12.5,
        "market_cap_usd": 3e9, "analyst_count": 18, "growth_5y_est_pct": 20.0,
        "past_growth_5y_pct": -5.0, "current_ratio": 0.9,
        "eps_history": [{"year": y, "eps": -1.0 - 0.1 * (y - 2014)} for y in range(2014, 2019)],
        "eps_fy0_est": -1.6, "eps_fy1_est": -1.7,
    }
    with open(os.path.join(HERE, "amzn_retro.json"), "w") as f:
        json.dump({"as_of": "2015-03-15", "stocks": [s, neg]}, f, indent=2)
        f.write("\n")
    ratio = (210.5 * 27.12) / 292.24
    print("amzn iv5:", 210.5 * 27.12, "ann:", 100 * (ratio ** 0.2 - 1))


def summary12():
    # ticker, sector, industry, cap, 5Y% target, past, analysts, eps, growth
    rows = [
        ("TA", "Technology", "Software", 400e9, 18, 20, 30, 5.0, 15),
        ("TB", "Technology", "Software", 100e9, 30, 35, 22, 2.0, 25),
        ("TC", "Technology", "Semiconductors", 200e9, 12, 10, 18, 4.0, 10),
        ("TD", "Technology", "Semiconductors", 50e9, 25, 40, 12, 1.5, 20),
        ("TE", "Technology", "Software", 5e9, 60, 80, 6, 0.8, 40),
        ("HA", "Healthcare", "Biotechnology", 150e9, 10, 8, 25, 6.0, 9),
        ("HB", "Healthcare", "Medical Devices", 90e9, 14, 12, 16, 3.0, 11),
        ("HC", "Healthcare", "Biotechnology", 30e9, 22, 5, 11, 2.5, 18),
        ("HD", "Healthcare", "Medical Devices", 2e9, 40, 60, 4, 1.0, 30),
        ("EA", "Energy", "Oil & Gas E&P", 120e9, 6, 2, 20, 4.5, 4),
        ("EB", "Energy", "Oil & Gas E&P", 60e9, -4, -3, 14, 3.5, 2),
        ("EC", "Energy", "Oil & Gas E&P", 1e9, 15, 30, 9, 1.2, 12),
    ]
    stocks, table = [], []
    for t, sec, ind, cap, r, past, an, eps, g in rows:
        mult = Decimal("8.5") + 2 * Decimal(g)
        factor = (1 + Decimal(r) / 100) ** HORIZON
        price0 = mult * Decimal(eps) / factor
        s, ret = engineer(t, t + " Corp", sec, ind, price0, eps, g, r, cap, past, an, 1.5,
                          slope=0)
        stocks.append(s)
        table.append((t, sec, ind, cap, r, past, an, ret))
    write_json("summary12.json", stocks)

    eligible = [row for row in table if row[6] >= 10]
    print("summary eligible count:", len(eligible))
    for key, label in ((1, "sector"), (2, "industry")):
        groups = {}
        for row in eligible:
            groups.setdefault(row[key], []).append(row)
        for g, members in sorted(groups.items()):
            w = sum(m[3] for m in members)
            fwd = sum(m[3] * m[4] for m in members) / w
            past = sum(m[3] * m[5] for m in members) / w
            print(f"  {label} {g}: w5y={fwd:.6f} wp5={past:.6f} n={len(members)}")
    w = sum(m[3] for m in eligible)
    print(f"  all: w5y={sum(m[3]*m[4] for m in eligible)/w:.6f} "
          f"wp5={sum(m[3]*m[5] for m in eligible)/w:.6f} n={len(eligible)}")
    print("  realized 5Y%:", {row[0]: round(row[7], 6) for row in table})


def mixed_csv():
    header = ("ticker,name,sector,industry,currency,price,market_cap_usd,analyst_count,"
              "growth_5y_est_pct,past_growth_5y_pct,current_ratio,eps_year1,eps_y1,eps_y2,"
              "eps_y3,eps_y4,eps_y5,eps_fy0_est,eps_fy1_est")
    lines = [
        "# as_of: 2020-03-15",
        header,
        '"MEGA1","Mega One, Inc.",Technology,Software,USD,100,400000000000,30,20,10,1.2,'
        "2015,1,2,3,4,5,6,7",
        "MEGA2,Mega Two,Technology,Software,USD,80,350000000000,26,5,4,0.9,2015,3,3,3,3,3,3,3",
        "MID1,Mid One,Energy,Oil & Gas E&P,USD,20,5000000000,15,12,3,2.0,"
        "2016,1.0,1.1,1.2,1.3,,1.4,1.5",
    ]
    with open(os.path.join(HERE, "mixed_tiers.csv"), "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    mega_screen()
    amzn()
    summary12()
    mixed_csv()
    write_json("empty.json", [])

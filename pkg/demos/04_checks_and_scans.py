# Running identity checks and inequality scans, as the CLI does.

from fullrank import identities as I

for report in I.run_check("thm5.1.2", 100) + I.run_check("prop3.1", 80, t=9, r=2):
    print(report.to_json())

# scans describe the sign of NF_2(r, t; n) - NF_2(s, t; n) per size class
scan = I.scan_inequality(7, 0, 1, 0, 300, by_class=True)
for c in scan.classes:
    print(c.d, c.pattern, c.n0)

# t = 11: every pair except (1, 2) is eventually positive; n0 is empirical
print(I.verify_tail_positivity(11, 300).details["n0"])

# two claims that the data contradict
print(I.verify_signs_t5_t7(300).first_discrepancy)
report = I.verify_injection(15)
print(report.first_discrepancy, report.details["collisions_per_n"])

"""
Regenerating the Betti and barcode tables
=========================================

Every row is a small hypergraph shipped with the package.  The report
prints expected and computed values side by side.
"""
from hyperhom.repro import run_repro

report = run_repro()
print(report.render())
for cell in report.failures():
    print("mismatch:", cell.table, cell.row, cell.column)

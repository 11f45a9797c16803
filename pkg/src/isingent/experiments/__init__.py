from isingent.experiments.scenarios import Scenario, catalog_scenarios, load_catalog, run_scenario, run_scenarios
from isingent.experiments.series import Peak, TimeSeries, emit, emit_svg, find_peaks, read_csv, read_json

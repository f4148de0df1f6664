# Measures, oracle, generators and text formats

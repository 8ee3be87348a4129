from ghostseries.cli import main

main()
